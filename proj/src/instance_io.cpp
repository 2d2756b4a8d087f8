#include "framekit/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace framekit {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError("instance file: " + where + ": " + what);
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(where, "non-finite value");
  return v;
}

Complex complex_entry(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    bad(where, "complex entries are [re, im] pairs");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

Eigen::Index positive_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    bad(where, "expected a positive integer");
  return static_cast<Eigen::Index>(j.get<long long>());
}

Matrix parse_operator(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& item : j.items())
    if (item.key() != "rows" && item.key() != "cols" && item.key() != "entries")
      bad(where, "unknown key '" + item.key() + "'");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    bad(where, "needs rows, cols, entries");
  const Eigen::Index rows = positive_index(j["rows"], where + ".rows");
  const Eigen::Index cols = positive_index(j["cols"], where + ".cols");
  const json& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows * cols))
    bad(where + ".entries", "expected rows*cols entries (row-major)");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index jj = 0; jj < cols; ++jj) {
      std::ostringstream w;
      w << where << ".entries[" << (i * cols + jj) << "]";
      m(i, jj) = complex_entry(entries[static_cast<std::size_t>(i * cols + jj)],
                               w.str());
    }
  return m;
}

FrameSequence parse_frame(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& item : j.items())
    if (item.key() != "dim" && item.key() != "vectors")
      bad(where, "unknown key '" + item.key() + "'");
  if (!j.contains("dim") || !j.contains("vectors"))
    bad(where, "needs dim and vectors");
  const Eigen::Index dim = positive_index(j["dim"], where + ".dim");
  const json& vecs = j["vectors"];
  if (!vecs.is_array() || vecs.empty())
    bad(where + ".vectors", "expected a nonempty array");
  Matrix cols(dim, static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t n = 0; n < vecs.size(); ++n) {
    const json& v = vecs[n];
    std::ostringstream w;
    w << where << ".vectors[" << n << "]";
    if (!v.is_array() || v.size() != static_cast<std::size_t>(dim))
      bad(w.str(), "vector length must equal dim");
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::ostringstream we;
      we << w.str() << "[" << i << "]";
      cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) =
          complex_entry(v[i], we.str());
    }
  }
  return FrameSequence(std::move(cols));
}

json dump_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json dump_operator(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back(dump_complex(m(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json dump_frame(const FrameSequence& f) {
  json vecs = json::array();
  for (Eigen::Index n = 0; n < f.count(); ++n) {
    json v = json::array();
    for (Eigen::Index i = 0; i < f.dim(); ++i)
      v.push_back(dump_complex(f.vectors(i, n)));
    vecs.push_back(v);
  }
  return json{{"dim", f.dim()}, {"vectors", vecs}};
}

void check_serializable(const Instance& inst) {
  auto finite = [](const Matrix& m) {
    return m.array().isFinite().all();
  };
  for (const auto& [name, op] : inst.operators)
    if (!finite(op)) throw ParseError("serialize: operator '" + name +
                                      "' has non-finite entries");
  for (const auto& [name, f] : inst.frames)
    if (!finite(f.vectors))
      throw ParseError("serialize: frame '" + name + "' has non-finite entries");
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance file: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("root", "expected an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "field" && k != "operators" && k != "frames" && k != "pairs" &&
        k != "tolerance")
      bad("root", "unknown key '" + k + "'");
  }
  if (!j.contains("field") || !j["field"].is_string() ||
      j["field"].get<std::string>() != "complex")
    bad("field", "must be the string \"complex\"");

  Instance inst;
  if (j.contains("operators")) {
    if (!j["operators"].is_object()) bad("operators", "expected an object");
    for (const auto& item : j["operators"].items())
      inst.operators[item.key()] =
          parse_operator(item.value(), "operators." + item.key());
  }
  if (j.contains("frames")) {
    if (!j["frames"].is_object()) bad("frames", "expected an object");
    for (const auto& item : j["frames"].items())
      inst.frames[item.key()] = parse_frame(item.value(), "frames." + item.key());
  }
  if (j.contains("pairs")) {
    if (!j["pairs"].is_object()) bad("pairs", "expected an object");
    for (const auto& item : j["pairs"].items()) {
      const std::string where = "pairs." + item.key();
      const json& p = item.value();
      if (!p.is_object() || !p.contains("left") || !p.contains("right") ||
          !p["left"].is_string() || !p["right"].is_string())
        bad(where, "expected {\"left\": <frame>, \"right\": <frame>}");
      for (const auto& sub : p.items())
        if (sub.key() != "left" && sub.key() != "right")
          bad(where, "unknown key '" + sub.key() + "'");
      const std::string left = p["left"].get<std::string>();
      const std::string right = p["right"].get<std::string>();
      if (!inst.frames.count(left)) bad(where, "unresolved frame '" + left + "'");
      if (!inst.frames.count(right))
        bad(where, "unresolved frame '" + right + "'");
      if (inst.frames.at(left).count() != inst.frames.at(right).count())
        bad(where, "pair members must have equal counts");
      inst.pairs[item.key()] = {left, right};
    }
  }
  if (j.contains("tolerance")) {
    const json& t = j["tolerance"];
    if (!t.is_object()) bad("tolerance", "expected an object");
    ToleranceConfig tol;
    for (const auto& item : t.items()) {
      const double v = finite_number(item.value(), "tolerance." + item.key());
      if (v <= 0) bad("tolerance." + item.key(), "must be positive");
      if (item.key() == "rank_rel")
        tol.rank_rel = v;
      else if (item.key() == "psd_rel")
        tol.psd_rel = v;
      else if (item.key() == "residual_rel")
        tol.residual_rel = v;
      else
        bad("tolerance", "unknown key '" + item.key() + "'");
    }
    inst.tolerance = tol;
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst, bool pretty) {
  check_serializable(inst);
  json j;
  j["field"] = "complex";
  if (!inst.operators.empty()) {
    json ops = json::object();
    for (const auto& [name, op] : inst.operators) ops[name] = dump_operator(op);
    j["operators"] = ops;
  }
  if (!inst.frames.empty()) {
    json frames = json::object();
    for (const auto& [name, f] : inst.frames) frames[name] = dump_frame(f);
    j["frames"] = frames;
  }
  if (!inst.pairs.empty()) {
    json pairs = json::object();
    for (const auto& [name, pr] : inst.pairs)
      pairs[name] = json{{"left", pr.first}, {"right", pr.second}};
    j["pairs"] = pairs;
  }
  if (inst.tolerance) {
    j["tolerance"] = json{{"rank_rel", inst.tolerance->rank_rel},
                          {"psd_rel", inst.tolerance->psd_rel},
                          {"residual_rel", inst.tolerance->residual_rel}};
  }
  return j.dump(pretty ? 2 : -1) + "\n";
}

void save_instance(const Instance& inst, const std::string& path, bool pretty) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << serialize_instance(inst, pretty);
}

}  // namespace framekit
