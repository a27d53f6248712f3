#include "tensorframe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tensorframe/document.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/instances.hpp"
#include "tensorframe/verify.hpp"

namespace tensorframe::cli {

namespace {

using json = nlohmann::ordered_json;
using verify::CheckResult;
using verify::make_check;

constexpr double kDefaultTol = 1e-8;

struct Report {
  std::string command;
  std::string inputs_digest;
  json results = json::object();
  std::vector<CheckResult> checks;
  double wall_clock_ms = 0.0;
};

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_null()) return "null";
  return v.dump();
}

void render_results(std::ostream& os, const std::string& prefix, const json& node) {
  for (const auto& [key, value] : node.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_results(os, name, value);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) render_results(os, name + "." + std::to_string(i), value[i]);
    } else if (value.is_array()) {
      os << name;
      for (const auto& x : value) os << ' ' << scalar_text(x);
      os << '\n';
    } else {
      os << name << ' ' << scalar_text(value) << '\n';
    }
  }
}

void render_text(std::ostream& os, const Report& r) {
  os << "command " << r.command << '\n';
  os << "inputs " << r.inputs_digest << '\n';
  render_results(os, "", r.results);
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " residual=" << format_number(c.residual)
       << " tol=" << format_number(c.tolerance);
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << "elapsed_ms " << format_number(r.wall_clock_ms) << '\n';
}

void render_json(std::ostream& os, const Report& r) {
  json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  j["wall_clock_ms"] = r.wall_clock_ms;
  j["results"] = r.results;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(format_number(c.residual));
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  os << j.dump(2) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  std::string text;
  io::FrameDocument doc;
};

Input load(const std::string& path) {
  Input in;
  in.text = read_file(path);
  in.doc = io::parse_document(in.text);
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

json bounds_json(const modframe::FrameBounds& b) { return json::array({b.lower, b.upper}); }

bool tight(const modframe::FrameBounds& b, double tol) { return b.upper - b.lower <= tol * b.upper; }

/// Records a frame/fusion bounds result; returns whether it is a frame.
bool record_bounds(json& results, const modframe::BoundsResult& r, double tol) {
  if (const auto* b = std::get_if<modframe::FrameBounds>(&r)) {
    results["status"] = "frame";
    results["bounds"] = bounds_json(*b);
    results["tight"] = tight(*b, tol);
    return true;
  }
  const auto& n = std::get<modframe::NotAFrame>(r);
  results["status"] = "NotAFrame";
  results["min_eigenvalue"] = n.min_eigenvalue;
  results["bessel_bound"] = n.max_eigenvalue;
  return false;
}

json block_dims_json(const std::vector<std::size_t>& dims) {
  json j = json::array();
  for (auto d : dims) j.push_back(d);
  return j;
}

struct Common {
  std::string output = "text";
  std::optional<double> tol;
};

double resolve_tol(const Common& c) {
  if (c.tol) return *c.tol;
  if (const char* env = std::getenv("TENSORFRAME_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw InvalidInput("TENSORFRAME_TOL must be a positive number");
    return v;
  }
  return kDefaultTol;
}

bool tol_overridden(const Common& c) { return c.tol.has_value() || std::getenv("TENSORFRAME_TOL") != nullptr; }

int exit_for(const Report& r, bool math_ok) {
  return math_ok && verify::all_passed(r.checks) ? kExitOk : kExitMathFailure;
}

// ---- commands -------------------------------------------------------------

struct CheckFrameArgs {
  std::string path;
  bool hilbert = false;
  bool module = false;
  std::size_t samples = 32;
  std::uint64_t seed = 0;
};

int cmd_check_frame(const CheckFrameArgs& a, double tol, Report& r) {
  const auto in = load(a.path);
  r.inputs_digest = io::digest(in.text);
  if (in.doc.kind != io::DocumentKind::Frame) throw KindMismatch("check-frame expects a frame document");
  if (a.hilbert && in.doc.block_dims != std::vector<std::size_t>{1})
    throw InvalidInput("--hilbert needs a frame over the complex numbers");
  const auto f = io::to_frame(in.doc);
  r.results["algebra"] = block_dims_json(f.module.algebra.block_dims());
  r.results["rank"] = f.module.rank;
  r.results["vectors"] = f.size();
  const auto b = modframe::frame_bounds(f, tol);
  const bool ok = record_bounds(r.results, b, tol);
  if (ok) {
    const bool agree = modframe::verify_frame_pointwise(f, std::get<modframe::FrameBounds>(b), a.samples, a.seed,
                                                        10.0 * tol);
    r.checks.push_back(make_check("frame-bounds-pointwise", agree ? 0.0 : 1.0, 0.0));
  }
  return exit_for(r, ok);
}

struct TensorArgs {
  std::string a;
  std::string b;
  std::string out;
};

int tensor_frames(const io::FrameDocument& da, const io::FrameDocument& db, double tol, Report& r,
                  io::FrameDocument& result) {
  const auto fa = io::to_frame(da);
  const auto fb = io::to_frame(db);
  const auto ba = modframe::frame_bounds(fa, tol);
  const auto bb = modframe::frame_bounds(fb, tol);
  if (!modframe::is_frame(ba) || !modframe::is_frame(bb)) {
    r.results["status"] = "NotAFrame";
    return kExitMathFailure;
  }
  result = io::from_frame(modframe::tensor_frame(fa, fb));
  const auto recomputed = io::to_frame(io::parse_document(io::serialize_document(result)));
  const auto bt = modframe::frame_bounds(recomputed, tol);
  const bool ok = record_bounds(r.results, bt, tol);
  const auto pa = modframe::expect_bounds(ba);
  const auto pb = modframe::expect_bounds(bb);
  r.results["input_bounds"] = json::array({pa.lower, pa.upper, pb.lower, pb.upper});
  if (ok) {
    const auto t = std::get<modframe::FrameBounds>(bt);
    r.checks.push_back(make_check("tensor-frame-bounds",
                                  std::max(verify::relative_error(t.lower, pa.lower * pb.lower),
                                           verify::relative_error(t.upper, pa.upper * pb.upper)),
                                  tol));
  }
  return exit_for(r, ok);
}

int tensor_fusions(const io::FrameDocument& da, const io::FrameDocument& db, double tol, Report& r,
                   io::FrameDocument& result) {
  const auto fa = io::to_fusion(da);
  const auto fb = io::to_fusion(db);
  const auto ba = fusion::fusion_bounds(fa, tol);
  const auto bb = fusion::fusion_bounds(fb, tol);
  if (!modframe::is_frame(ba) || !modframe::is_frame(bb)) {
    r.results["status"] = "NotAFrame";
    return kExitMathFailure;
  }
  result = io::from_fusion(fusion::tensor_fusion(fa, fb));
  const auto recomputed = io::to_fusion(io::parse_document(io::serialize_document(result)));
  const auto bt = fusion::fusion_bounds(recomputed, tol);
  const bool ok = record_bounds(r.results, bt, tol);
  const auto pa = modframe::expect_bounds(ba);
  const auto pb = modframe::expect_bounds(bb);
  r.results["input_bounds"] = json::array({pa.lower, pa.upper, pb.lower, pb.upper});
  if (ok) {
    const auto t = std::get<modframe::FrameBounds>(bt);
    r.checks.push_back(make_check("fusion-tensor-bounds",
                                  std::max(verify::relative_error(t.lower, pa.lower * pb.lower),
                                           verify::relative_error(t.upper, pa.upper * pb.upper)),
                                  tol));
  }
  return exit_for(r, ok);
}

json resolution_json(const fusion::ResolutionResult& res) {
  json j;
  if (const auto* b = std::get_if<modframe::FrameBounds>(&res)) {
    j["status"] = "resolution";
    j["bounds"] = bounds_json(*b);
  } else {
    const auto& n = std::get<fusion::NotAResolution>(res);
    j["status"] = "NotAResolution";
    j["sum_residual"] = n.sum_residual;
    j["min_eigenvalue"] = n.min_eigenvalue;
    j["max_eigenvalue"] = n.max_eigenvalue;
  }
  return j;
}

int tensor_resolutions(const io::FrameDocument& da, const io::FrameDocument& db, double tol, Report& r,
                       io::FrameDocument& result) {
  const auto ra = io::to_resolution(da);
  const auto rb = io::to_resolution(db);
  const auto ca = fusion::check_resolution(ra, tol);
  const auto cb = fusion::check_resolution(rb, tol);
  if (!fusion::is_resolution(ca) || !fusion::is_resolution(cb)) {
    r.results["status"] = "NotAResolution";
    return kExitMathFailure;
  }
  const auto t = fusion::tensor_resolution(ra, rb, tol);
  result = io::from_resolution(t);
  const auto recomputed = io::to_resolution(io::parse_document(io::serialize_document(result)));
  const auto ct = fusion::check_resolution(recomputed, tol);
  const auto status = resolution_json(ct);
  for (const auto& [k, v] : status.items()) r.results[k] = v;
  const auto pa = std::get<modframe::FrameBounds>(ca);
  const auto pb = std::get<modframe::FrameBounds>(cb);
  r.results["input_bounds"] = json::array({pa.lower, pa.upper, pb.lower, pb.upper});
  const double d = static_cast<double>(t.ambient_dim);
  r.checks.push_back(make_check("resolution-tensor-sum", fusion::resolution_sum_residual(recomputed), tol * std::sqrt(d)));
  if (!fusion::is_resolution(ct)) return kExitMathFailure;
  const auto bt = std::get<modframe::FrameBounds>(ct);
  const double violation =
      std::max({0.0, pa.lower * pb.lower - bt.lower, bt.upper - pa.upper * pb.upper}) / (pa.upper * pb.upper);
  r.checks.push_back(make_check("resolution-tensor-bounds", violation, tol));
  return exit_for(r, true);
}

int tensor_groups(const io::FrameDocument& da, const io::FrameDocument& db, double tol, Report& r,
                  io::FrameDocument& result) {
  const auto pa = io::to_representation(da);
  const auto pb = io::to_representation(db);
  const auto tr = groupframe::tensor_representation(pa, pb);
  std::vector<std::vector<linalg::Complex>> candidates;
  for (const auto& v : da.candidates)
    for (const auto& w : db.candidates) candidates.push_back(groupframe::tensor_vector(v, w));
  result = io::from_group(tr, candidates);
  const auto recomputed = io::parse_document(io::serialize_document(result));
  const auto rep = io::to_representation(recomputed);
  r.results["group"] = block_dims_json(rep.group().cyclic_orders());
  r.results["dim"] = rep.dim();
  r.checks.push_back(make_check("group-representation", groupframe::representation_residual(rep), tol));

  bool ok = true;
  json per = json::array();
  std::size_t idx = 0;
  for (const auto& v : da.candidates) {
    const auto bv = modframe::frame_bounds(groupframe::orbit_frame(pa, v), tol);
    for (const auto& w : db.candidates) {
      const auto bw = modframe::frame_bounds(groupframe::orbit_frame(pb, w), tol);
      const auto bt = modframe::frame_bounds(groupframe::orbit_frame(rep, recomputed.candidates[idx]), tol);
      json cj;
      ok = record_bounds(cj, bt, tol) && ok;
      if (modframe::is_frame(bv) && modframe::is_frame(bw) && modframe::is_frame(bt)) {
        const auto a1 = std::get<modframe::FrameBounds>(bv);
        const auto a2 = std::get<modframe::FrameBounds>(bw);
        const auto t = std::get<modframe::FrameBounds>(bt);
        r.checks.push_back(make_check("group-orbit-bounds[" + std::to_string(idx) + "]",
                                      std::max(verify::relative_error(t.lower, a1.lower * a2.lower),
                                               verify::relative_error(t.upper, a1.upper * a2.upper)),
                                      tol));
      }
      per.push_back(std::move(cj));
      ++idx;
    }
  }
  if (!per.empty()) r.results["candidates"] = std::move(per);
  return exit_for(r, ok);
}

int cmd_tensor(const TensorArgs& a, double tol, Report& r) {
  const auto ia = load(a.a);
  const auto ib = load(a.b);
  r.inputs_digest = io::digest(ia.text + ib.text);
  if (ia.doc.kind != ib.doc.kind)
    throw KindMismatch(std::string("cannot tensor a ") + std::string(io::to_string(ia.doc.kind)) + " with a " +
                       std::string(io::to_string(ib.doc.kind)));
  r.results["kind"] = std::string(io::to_string(ia.doc.kind));
  io::FrameDocument result;
  int code = kExitOk;
  switch (ia.doc.kind) {
    case io::DocumentKind::Frame: code = tensor_frames(ia.doc, ib.doc, tol, r, result); break;
    case io::DocumentKind::Fusion: code = tensor_fusions(ia.doc, ib.doc, tol, r, result); break;
    case io::DocumentKind::Resolution: code = tensor_resolutions(ia.doc, ib.doc, tol, r, result); break;
    case io::DocumentKind::Group: code = tensor_groups(ia.doc, ib.doc, tol, r, result); break;
  }
  if (!a.out.empty() && code != kExitMathFailure) {
    const auto text = io::serialize_document(result);
    write_file(a.out, text);
    r.results["output_digest"] = io::digest(text);
  }
  return code;
}

int cmd_fusion_check(const std::string& path, double tol, Report& r) {
  const auto in = load(path);
  r.inputs_digest = io::digest(in.text);
  const auto f = io::to_fusion(in.doc);
  r.results["dim"] = f.ambient_dim;
  json dims = json::array();
  for (const auto& m : f.members) dims.push_back(m.dim());
  r.results["subspace_dims"] = std::move(dims);
  const bool ok = record_bounds(r.results, fusion::fusion_bounds(f, tol), tol);
  return exit_for(r, ok);
}

int cmd_resolution_check(const std::string& path, double tol, Report& r) {
  const auto in = load(path);
  r.inputs_digest = io::digest(in.text);
  const auto fam = io::to_resolution(in.doc);
  r.results["dim"] = fam.ambient_dim;
  r.results["operators"] = fam.members.size();
  const auto res = fusion::check_resolution(fam, tol);
  const auto status = resolution_json(res);
  for (const auto& [k, v] : status.items()) r.results[k] = v;
  r.checks.push_back(make_check("resolution-sum", fusion::resolution_sum_residual(fam),
                                tol * std::sqrt(static_cast<double>(fam.ambient_dim))));
  return exit_for(r, fusion::is_resolution(res));
}

int cmd_group_frame(const std::string& path, double tol, Report& r) {
  const auto in = load(path);
  r.inputs_digest = io::digest(in.text);
  const auto pi = io::to_representation(in.doc);
  r.results["group"] = block_dims_json(pi.group().cyclic_orders());
  r.results["dim"] = pi.dim();
  r.checks.push_back(make_check("group-representation", groupframe::representation_residual(pi), tol));
  if (!verify::all_passed(r.checks)) return kExitMathFailure;

  bool ok = true;
  json per = json::array();
  for (std::size_t k = 0; k < in.doc.candidates.size(); ++k) {
    const auto& v = in.doc.candidates[k];
    json cj;
    const bool frame = record_bounds(cj, modframe::frame_bounds(groupframe::orbit_frame(pi, v), tol), tol);
    cj["bessel_bound"] = groupframe::bessel_bound(pi, v);
    ok = ok && frame;
    if (frame) {
      try {
        const auto sd = groupframe::spectral_data(pi, v, tol);
        cj["support_size"] = sd.support.size();
        const auto a = groupframe::analysis_operator(pi, v);
        const auto u = groupframe::decomposition_operator(sd);
        const std::string suffix = "[" + std::to_string(k) + "]";
        r.checks.push_back(make_check("group-analysis-intertwining" + suffix,
                                      groupframe::analysis_intertwining_residual(pi, a), tol));
        r.checks.push_back(make_check("group-spectral-resolution" + suffix,
                                      groupframe::spectral_resolution_residual(pi, sd), tol));
        r.checks.push_back(make_check("group-decomposition-intertwining" + suffix,
                                      groupframe::decomposition_intertwining_residual(pi, sd, u), tol));
        r.checks.push_back(make_check("group-decomposition-unitary" + suffix,
                                      groupframe::decomposition_unitarity_residual(u), tol));
      } catch (const MultiplicityTooHigh& e) {
        cj["status"] = "MultiplicityTooHigh";
        ok = false;
      }
    }
    per.push_back(std::move(cj));
  }
  if (!per.empty()) r.results["candidates"] = std::move(per);
  return exit_for(r, ok);
}

struct VerifyArgs {
  std::vector<std::string> paths;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  bool trials_given = false;
};

int cmd_verify(const VerifyArgs& a, const Common& common, Report& r) {
  const auto suite = verify::parse_suite(a.suite);
  if (!suite) throw InvalidInput("unknown suite '" + a.suite + "'");
  verify::VerifyOptions opts;
  opts.suite = *suite;
  opts.seed = a.seed;
  if (tol_overridden(common)) opts.tolerance = resolve_tol(common);

  std::string joined;
  std::vector<io::FrameDocument> docs;
  for (const auto& p : a.paths) {
    auto in = load(p);
    joined += in.text;
    docs.push_back(std::move(in.doc));
  }
  r.inputs_digest = io::digest(joined);

  std::vector<CheckResult> checks;
  if (!docs.empty()) checks = verify::run_on_documents(opts, docs);
  std::size_t trials = 0;
  if (docs.empty() || a.trials_given) {
    opts.trials = trials = a.trials;
    for (auto&& c : verify::run_random(opts)) checks.push_back(std::move(c));
  }
  r.results["suite"] = std::string(verify::to_string(opts.suite));
  r.results["seed"] = a.seed;
  r.results["documents"] = docs.size();
  r.results["trials"] = trials;
  r.checks = verify::summarize(checks);
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.passed ? 1 : 0;
  r.results["checks_passed"] = passed;
  r.results["checks_total"] = r.checks.size();
  return exit_for(r, true);
}

struct GenArgs {
  std::string kind;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::string algebra = "1";
  std::uint64_t seed = 0;
  std::string out;
};

std::vector<std::size_t> parse_block_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw InvalidParams("bad --algebra entry '" + item + "'");
    }
    if (pos != item.size() || v == 0) throw InvalidParams("bad --algebra entry '" + item + "'");
    dims.push_back(v);
  }
  if (dims.empty()) throw InvalidParams("--algebra needs at least one block size");
  return dims;
}

io::FrameDocument generate(const GenArgs& a) {
  if (a.dim == 0) throw InvalidParams("--dim must be at least 1");
  if (a.count == 0) throw InvalidParams("--count must be at least 1");
  const auto dims = parse_block_dims(a.algebra);
  Rng rng(a.seed);
  if (a.kind == "frame") {
    if (a.count < a.dim) throw InvalidParams("--count must be at least --dim for a frame");
    const modframe::HilbertModule m(cstar::CStarAlgebra(dims), a.dim);
    return io::from_frame(modframe::random_frame(m, a.count, rng));
  }
  if (dims != std::vector<std::size_t>{1}) throw InvalidParams("--algebra only applies to --kind frame");
  if (a.kind == "fusion") return io::from_fusion(instances::random_fusion_frame(a.dim, a.count, rng));
  if (a.kind == "group") {
    if (a.count < a.dim) throw InvalidParams("--count (the group order) must be at least --dim");
    const groupframe::FiniteAbelianGroup g({a.count});
    const auto pi = instances::random_multiplicity_free_rep(g, a.dim, rng);
    return io::from_group(pi, {instances::random_vector(a.dim, rng)});
  }
  throw InvalidParams("unknown --kind '" + a.kind + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ShapeMismatch*>(&e) ||
      dynamic_cast<const KindMismatch*>(&e) || dynamic_cast<const InvalidParams*>(&e) ||
      dynamic_cast<const InvalidInput*>(&e))
    return kExitInputError;
  if (dynamic_cast<const Error*>(&e)) return kExitMathFailure;
  return kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames, fusion frames and group frames under tensor products", "tensorframe"};
  app.require_subcommand(1);

  Common common;
  double tol_value = kDefaultTol;
  std::vector<CLI::Option*> tol_options;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", common.output, "Report format")->check(CLI::IsMember({"text", "json"}));
    tol_options.push_back(
        sub->add_option("--tol", tol_value, "Tolerance (default 1e-8, or TENSORFRAME_TOL)")->check(CLI::PositiveNumber));
  };

  CheckFrameArgs cf;
  auto* check_frame = app.add_subcommand("check-frame", "Optimal frame bounds of a frame document");
  check_frame->add_option("path", cf.path, "Frame document")->required();
  auto* module_flag = check_frame->add_flag("--module", cf.module, "Treat as a module frame (default)");
  check_frame->add_flag("--hilbert", cf.hilbert, "Require a frame over the complex numbers")->excludes(module_flag);
  check_frame->add_option("--samples", cf.samples, "Random vectors for the pointwise check");
  check_frame->add_option("--seed", cf.seed, "Seed for the pointwise check");
  add_common(check_frame);

  TensorArgs ta;
  auto* tensor = app.add_subcommand("tensor", "Tensor product of two documents of the same kind");
  tensor->add_option("a", ta.a, "Left document")->required();
  tensor->add_option("b", ta.b, "Right document")->required();
  tensor->add_option("--out", ta.out, "Write the product document here");
  add_common(tensor);

  std::string fusion_path;
  auto* fusion_check = app.add_subcommand("fusion-check", "Bounds of a fusion frame document");
  fusion_check->add_option("path", fusion_path, "Fusion document")->required();
  add_common(fusion_check);

  std::string resolution_path;
  auto* resolution_check = app.add_subcommand("resolution-check", "Check a resolution of the identity");
  resolution_check->add_option("path", resolution_path, "Resolution document")->required();
  add_common(resolution_check);

  std::string group_path;
  auto* group_frame = app.add_subcommand("group-frame", "Orbit frames and decompositions of a group document");
  group_frame->add_option("path", group_path, "Group document")->required();
  add_common(group_frame);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run property checks on documents or random instances");
  verify_cmd->add_option("paths", va.paths, "Documents to check");
  verify_cmd->add_option("--suite", va.suite, "tensor, fusion, resolution, group or all")
      ->check(CLI::IsMember({"tensor", "fusion", "resolution", "group", "all"}));
  verify_cmd->add_option("--seed", va.seed, "Seed for random instances");
  auto* trials_opt = verify_cmd->add_option("--trials", va.trials, "Random trials (default 20)");
  add_common(verify_cmd);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random document");
  gen->add_option("--kind", ga.kind, "frame, fusion or group")->required();
  gen->add_option("--dim", ga.dim, "Module rank or ambient dimension")->required();
  gen->add_option("--count", ga.count, "Vectors, subspaces or group order")->required();
  gen->add_option("--algebra", ga.algebra, "Block sizes, e.g. 2,1");
  gen->add_option("--seed", ga.seed, "Seed");
  gen->add_option("--out", ga.out, "Output path (stdout if omitted)");
  add_common(gen);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  for (const auto* o : tol_options)
    if (o->count() > 0) common.tol = tol_value;
  va.trials_given = trials_opt->count() > 0;

  Report r;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    const double tol = resolve_tol(common);
    if (check_frame->parsed()) {
      r.command = "check-frame";
      code = cmd_check_frame(cf, tol, r);
    } else if (tensor->parsed()) {
      r.command = "tensor";
      code = cmd_tensor(ta, tol, r);
    } else if (fusion_check->parsed()) {
      r.command = "fusion-check";
      code = cmd_fusion_check(fusion_path, tol, r);
    } else if (resolution_check->parsed()) {
      r.command = "resolution-check";
      code = cmd_resolution_check(resolution_path, tol, r);
    } else if (group_frame->parsed()) {
      r.command = "group-frame";
      code = cmd_group_frame(group_path, tol, r);
    } else if (verify_cmd->parsed()) {
      r.command = "verify";
      code = cmd_verify(va, common, r);
    } else if (gen->parsed()) {
      const auto text = io::serialize_document(generate(ga));
      if (ga.out.empty()) {
        out << text;
        return kExitOk;
      }
      write_file(ga.out, text);
      r.command = "gen";
      r.inputs_digest = io::digest(ga.kind + " " + std::to_string(ga.dim) + " " + std::to_string(ga.count) + " " +
                                   ga.algebra + " " + std::to_string(ga.seed));
      r.results["kind"] = ga.kind;
      r.results["path"] = ga.out;
      r.results["output_digest"] = io::digest(text);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  r.wall_clock_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (common.output == "json")
    render_json(out, r);
  else
    render_text(out, r);
  return code;
}

}  // namespace tensorframe::cli
