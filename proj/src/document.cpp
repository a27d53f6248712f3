#include "tensorframe/document.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tensorframe/error.hpp"

namespace tensorframe::io {

using nlohmann::json;

namespace {

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex scalar must be [re, im], got " + j.dump());
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Complex> parse_vector(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of complex scalars");
  std::vector<Complex> v;
  for (const auto& z : j) v.push_back(parse_complex(z));
  return v;
}

json vector_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(complex_json(z));
  return a;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t parse_count(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
    throw ParseError(std::string("'") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> parse_counts(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a nonempty array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
      throw ParseError(std::string(what) + " entries must be positive integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

DocumentKind parse_kind(const std::string& s) {
  if (s == "frame") return DocumentKind::Frame;
  if (s == "fusion") return DocumentKind::Fusion;
  if (s == "resolution") return DocumentKind::Resolution;
  if (s == "group") return DocumentKind::Group;
  throw ParseError("unknown document kind '" + s + "'");
}

bool scalar_algebra(const std::vector<std::size_t>& dims) { return dims.size() == 1 && dims[0] == 1; }

void parse_frame_body(const json& j, FrameDocument& doc) {
  if (j.contains("algebra")) doc.block_dims = parse_counts(require(j.at("algebra"), "block_dims"), "block_dims");
  doc.rank = parse_count(j, "rank");
  const json& vs = require(j, "vectors");
  if (!vs.is_array() || vs.empty()) throw ParseError("'vectors' must be a nonempty array");
  const bool scalar = scalar_algebra(doc.block_dims);
  for (const auto& v : vs) {
    if (!v.is_array() || v.size() != doc.rank)
      throw ShapeMismatch("each vector needs " + std::to_string(doc.rank) + " coordinates");
    std::vector<std::vector<ComplexMatrix>> coords;
    for (const auto& c : v) {
      std::vector<ComplexMatrix> blocks;
      if (scalar && (c.is_primitive() || (c.is_array() && c.size() == 2 && c[0].is_primitive()))) {
        blocks.push_back(ComplexMatrix(1, 1, {parse_complex(c)}));
      } else {
        if (!c.is_array() || c.size() != doc.block_dims.size())
          throw ShapeMismatch("each coordinate needs " + std::to_string(doc.block_dims.size()) + " blocks");
        for (std::size_t b = 0; b < doc.block_dims.size(); ++b) {
          ComplexMatrix m = parse_matrix(c[b]);
          if (m.rows() != doc.block_dims[b] || m.cols() != doc.block_dims[b])
            throw ShapeMismatch("block " + std::to_string(b) + " must be " +
                                std::to_string(doc.block_dims[b]) + " square");
          blocks.push_back(std::move(m));
        }
      }
      coords.push_back(std::move(blocks));
    }
    doc.vectors.push_back(std::move(coords));
  }
}

void parse_weighted_matrices(const json& j, FrameDocument& doc, const char* list_key,
                             const char* matrix_key) {
  doc.rank = parse_count(j, "dim");
  const json& items = require(j, list_key);
  if (!items.is_array() || items.empty())
    throw ParseError(std::string("'") + list_key + "' must be a nonempty array");
  for (const auto& item : items) {
    ComplexMatrix m = parse_matrix(require(item, matrix_key));
    if (m.rows() != doc.rank) throw ShapeMismatch(std::string(matrix_key) + " has the wrong row count");
    doc.matrices.push_back(std::move(m));
    double w = 1.0;
    if (item.contains("weight")) {
      if (!item.at("weight").is_number()) throw ParseError("weight must be a number");
      w = item.at("weight").get<double>();
    }
    doc.weights.push_back(w);
  }
}

void parse_group_body(const json& j, FrameDocument& doc) {
  doc.rank = parse_count(j, "dim");
  const json& g = require(j, "group");
  GroupDescriptor desc;
  desc.cyclic_orders = parse_counts(require(g, "cyclic_orders"), "cyclic_orders");
  if (g.contains("generators"))
    for (const auto& m : g.at("generators")) desc.generators.push_back(parse_matrix(m));
  if (g.contains("matrices"))
    for (const auto& m : g.at("matrices")) desc.matrices.push_back(parse_matrix(m));
  if (desc.generators.empty() == desc.matrices.empty())
    throw ParseError("group needs exactly one of 'generators' or 'matrices'");
  for (const auto* list : {&desc.generators, &desc.matrices})
    for (const auto& m : *list)
      if (m.rows() != doc.rank || m.cols() != doc.rank)
        throw ShapeMismatch("representation matrices must be dim x dim");
  doc.group = std::move(desc);
  if (j.contains("vectors")) {
    for (const auto& v : j.at("vectors")) {
      auto c = parse_vector(v);
      if (c.size() != doc.rank) throw ShapeMismatch("candidate vector has the wrong dimension");
      doc.candidates.push_back(std::move(c));
    }
  }
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Frame: return "frame";
    case DocumentKind::Fusion: return "fusion";
    case DocumentKind::Resolution: return "resolution";
    case DocumentKind::Group: return "group";
  }
  return "unknown";
}

FrameDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  try {
    FrameDocument doc;
    const json& ver = require(j, "version");
    if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
      throw ParseError("unsupported schema version " + ver.dump());
    const json& kind = require(j, "kind");
    if (!kind.is_string()) throw ParseError("'kind' must be a string");
    doc.kind = parse_kind(kind.get<std::string>());
    switch (doc.kind) {
      case DocumentKind::Frame: parse_frame_body(j, doc); break;
      case DocumentKind::Fusion: parse_weighted_matrices(j, doc, "subspaces", "basis"); break;
      case DocumentKind::Resolution: parse_weighted_matrices(j, doc, "operators", "matrix"); break;
      case DocumentKind::Group: parse_group_body(j, doc); break;
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad document structure: ") + e.what());
  }
}

FrameDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize_document(const FrameDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["kind"] = std::string(to_string(doc.kind));
  switch (doc.kind) {
    case DocumentKind::Frame: {
      j["algebra"] = {{"block_dims", doc.block_dims}};
      j["rank"] = doc.rank;
      const bool scalar = scalar_algebra(doc.block_dims);
      json vs = json::array();
      for (const auto& v : doc.vectors) {
        json coords = json::array();
        for (const auto& c : v) {
          if (scalar) {
            coords.push_back(complex_json(c[0](0, 0)));
          } else {
            json blocks = json::array();
            for (const auto& b : c) blocks.push_back(matrix_json(b));
            coords.push_back(std::move(blocks));
          }
        }
        vs.push_back(std::move(coords));
      }
      j["vectors"] = std::move(vs);
      break;
    }
    case DocumentKind::Fusion:
    case DocumentKind::Resolution: {
      const bool fusion = doc.kind == DocumentKind::Fusion;
      j["dim"] = doc.rank;
      json items = json::array();
      for (std::size_t i = 0; i < doc.matrices.size(); ++i)
        items.push_back({{fusion ? "basis" : "matrix", matrix_json(doc.matrices[i])},
                         {"weight", doc.weights[i]}});
      j[fusion ? "subspaces" : "operators"] = std::move(items);
      break;
    }
    case DocumentKind::Group: {
      j["dim"] = doc.rank;
      json g;
      g["cyclic_orders"] = doc.group->cyclic_orders;
      if (!doc.group->generators.empty()) {
        json gens = json::array();
        for (const auto& m : doc.group->generators) gens.push_back(matrix_json(m));
        g["generators"] = std::move(gens);
      } else {
        json ms = json::array();
        for (const auto& m : doc.group->matrices) ms.push_back(matrix_json(m));
        g["matrices"] = std::move(ms);
      }
      j["group"] = std::move(g);
      json cs = json::array();
      for (const auto& c : doc.candidates) cs.push_back(vector_json(c));
      j["vectors"] = std::move(cs);
      break;
    }
  }
  return j.dump(2) + "\n";
}

FrameDocument from_frame(const modframe::ModuleFrame& f) {
  FrameDocument doc;
  doc.kind = DocumentKind::Frame;
  doc.block_dims = f.module.algebra.block_dims();
  doc.rank = f.module.rank;
  for (const auto& v : f.vectors) {
    std::vector<std::vector<ComplexMatrix>> coords;
    for (const auto& c : v.coords()) coords.push_back(c.blocks());
    doc.vectors.push_back(std::move(coords));
  }
  return doc;
}

modframe::ModuleFrame to_frame(const FrameDocument& doc) {
  if (doc.kind != DocumentKind::Frame) throw KindMismatch("expected a frame document");
  const modframe::HilbertModule m(cstar::CStarAlgebra(doc.block_dims), doc.rank);
  std::vector<modframe::ModuleVector> vs;
  for (const auto& v : doc.vectors) {
    std::vector<cstar::AlgebraElement> coords;
    for (const auto& c : v) coords.emplace_back(m.algebra, c);
    vs.emplace_back(m, std::move(coords));
  }
  return {m, std::move(vs)};
}

FrameDocument from_fusion(const fusion::FusionFrame& f) {
  FrameDocument doc;
  doc.kind = DocumentKind::Fusion;
  doc.rank = f.ambient_dim;
  for (const auto& w : f.members) {
    doc.matrices.push_back(w.basis());
    doc.weights.push_back(w.weight());
  }
  return doc;
}

fusion::FusionFrame to_fusion(const FrameDocument& doc) {
  if (doc.kind != DocumentKind::Fusion) throw KindMismatch("expected a fusion document");
  std::vector<fusion::WeightedSubspace> members;
  for (std::size_t i = 0; i < doc.matrices.size(); ++i) members.emplace_back(doc.matrices[i], doc.weights[i]);
  return {doc.rank, std::move(members)};
}

FrameDocument from_resolution(const fusion::OperatorFamily& r) {
  FrameDocument doc;
  doc.kind = DocumentKind::Resolution;
  doc.rank = r.ambient_dim;
  for (const auto& t : r.members) {
    doc.matrices.push_back(t.op);
    doc.weights.push_back(t.weight);
  }
  return doc;
}

fusion::OperatorFamily to_resolution(const FrameDocument& doc) {
  if (doc.kind != DocumentKind::Resolution) throw KindMismatch("expected a resolution document");
  std::vector<fusion::WeightedOperator> members;
  for (std::size_t i = 0; i < doc.matrices.size(); ++i) members.push_back({doc.matrices[i], doc.weights[i]});
  return {doc.rank, std::move(members)};
}

FrameDocument from_group(const groupframe::GroupRepresentation& pi,
                         const std::vector<std::vector<Complex>>& candidates) {
  FrameDocument doc;
  doc.kind = DocumentKind::Group;
  doc.rank = pi.dim();
  GroupDescriptor desc;
  desc.cyclic_orders = pi.group().cyclic_orders();
  for (std::size_t l = 0; l < desc.cyclic_orders.size(); ++l) {
    std::vector<std::size_t> unit(desc.cyclic_orders.size(), 0);
    unit[l] = desc.cyclic_orders[l] > 1 ? 1 : 0;
    desc.generators.push_back(pi(pi.group().index(unit)));
  }
  doc.group = std::move(desc);
  doc.candidates = candidates;
  return doc;
}

groupframe::GroupRepresentation to_representation(const FrameDocument& doc) {
  if (doc.kind != DocumentKind::Group || !doc.group) throw KindMismatch("expected a group document");
  const groupframe::FiniteAbelianGroup g(doc.group->cyclic_orders);
  if (!doc.group->generators.empty())
    return groupframe::GroupRepresentation::from_generators(g, doc.group->generators);
  return {g, doc.group->matrices};
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tensorframe::io
