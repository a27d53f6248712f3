#include <doctest.h>

#include "tensorframe/document.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/instances.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;
using namespace tensorframe::io;

TEST_CASE("documents round trip through text") {
  Rng rng(13);
  const std::vector<FrameDocument> docs{
      from_frame(instances::mercedes_benz_frame()),
      from_frame(modframe::random_frame(modframe::HilbertModule(cstar::CStarAlgebra({2, 1}), 2), 3, rng)),
      from_fusion(instances::random_fusion_frame(3, 2, rng)),
      from_resolution(instances::random_resolution(2, 3, rng)),
      from_group(instances::z4_diagonal_rep(), {{1.0, 1.0}, {1.0, 0.0}}),
  };
  for (const auto& doc : docs) {
    const auto text = serialize_document(doc);
    const auto back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("frames survive conversion") {
  Rng rng(14);
  const auto f = modframe::random_frame(modframe::HilbertModule(cstar::CStarAlgebra({2, 1}), 2), 3, rng);
  const auto g = to_frame(parse_document(serialize_document(from_frame(f))));
  REQUIRE(g.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(g.vectors[i] == f.vectors[i]);

  const auto pi = to_representation(from_group(instances::z4_diagonal_rep(), {}));
  CHECK(pi.matrices() == instances::z4_diagonal_rep().matrices());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": 2, "kind": "frame", "rank": 1, "vectors": [[[1,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "bogus"})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "frame", "rank": 2, "vectors": [[[1,0]]]})"),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "frame", "rank": 1, "vectors": [[[1,0,3]]]})"),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "frame", "rank": 1, "vectors": [[["x",0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"version": 1, "kind": "fusion", "dim": 2, "subspaces": [{"basis": [[1]], "weight": 1}]})"),
      ShapeMismatch);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), ParseError);
  const auto frame = parse_document(R"({"version": 1, "kind": "frame", "rank": 1, "vectors": [[2]]})");
  CHECK(frame.vectors[0][0][0](0, 0) == linalg::Complex{2.0, 0.0});
  CHECK_THROWS_AS(to_fusion(frame), KindMismatch);
}

TEST_CASE("digest is 64-bit FNV-1a") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
}
