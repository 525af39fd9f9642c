#include "tenfold/model_io.hpp"

#include <fstream>
#include <sstream>

namespace tenfold {

using nlohmann::json;

SchemaError::SchemaError(std::string f, std::string message, int l)
    : std::runtime_error((l > 0 ? "line " + std::to_string(l) + ": " : std::string()) + f + ": " + message),
      field(std::move(f)),
      line(l) {}

namespace {

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + "/" + key, "missing required field");
  return obj.at(key);
}

int require_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "/" + key, "expected an integer");
  return v.get<int>();
}

Eigen::MatrixXd real_block(const json& v, int n, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = v[i];
    const std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError(rp, "expected " + std::to_string(n) + " columns");
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) throw SchemaError(rp + "/" + std::to_string(j), "expected a number");
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

// A matrix is either {"re": ..., "im": ...} (im optional) or a bare real array.
Mat complex_matrix(const json& v, int n, const std::string& path) {
  if (v.is_array()) return real_block(v, n, path).cast<cplx>();
  if (!v.is_object() || !v.contains("re")) throw SchemaError(path, "expected a matrix with \"re\" and optional \"im\"");
  Mat m = real_block(v.at("re"), n, path + "/re").cast<cplx>();
  if (v.contains("im")) m += cplx(0, 1) * real_block(v.at("im"), n, path + "/im").cast<cplx>();
  return m;
}

int line_of(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

LoadedModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", e.what(), line_of(text, e.byte));
  }
  if (!doc.is_object()) throw SchemaError("/", "top level must be an object");
  const json& name = require(doc, "name", "");
  if (!name.is_string()) throw SchemaError("/name", "expected a string");
  const int d = require_int(doc, "d", "");
  const int n = require_int(doc, "N", "");
  if (d < 0) throw SchemaError("/d", "must be non-negative");
  if (n <= 0) throw SchemaError("/N", "must be positive");

  const json& hops = require(doc, "hoppings", "");
  if (!hops.is_array()) throw SchemaError("/hoppings", "expected an array");
  std::map<Lattice, Mat> stored;
  for (std::size_t h = 0; h < hops.size(); ++h) {
    const std::string path = "/hoppings/" + std::to_string(h);
    const json& entry = hops[h];
    const json& nv = require(entry, "n", path);
    if (!nv.is_array() || static_cast<int>(nv.size()) != d)
      throw SchemaError(path + "/n", "expected " + std::to_string(d) + " integers");
    Lattice key;
    for (const auto& c : nv) {
      if (!c.is_number_integer()) throw SchemaError(path + "/n", "expected integers");
      key.push_back(c.get<int>());
    }
    if (stored.count(key)) throw SchemaError(path + "/n", "duplicate lattice vector");
    stored[key] = complex_matrix(entry, n, path);
  }

  LoadedModel out{{BlochModel(name.get<std::string>(), d, n), {}}, {}};
  BlochModel& model = out.model.model;
  for (const auto& [key, t] : stored) {
    Lattice neg(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) neg[i] = -key[i];
    const bool zero = key == neg;
    if (zero) {
      if (hermiticity_residual(t) > kTolAlg) throw SchemaError("/hoppings", "on-site term is not Hermitian");
      model.add_hopping(key, t);
      continue;
    }
    auto partner = stored.find(neg);
    if (partner == stored.end()) {
      std::ostringstream w;
      w << "hopping n = [";
      for (std::size_t i = 0; i < key.size(); ++i) w << (i ? ", " : "") << key[i];
      w << "] stored without its reverse; added t^dagger at -n";
      out.warnings.push_back(w.str());
      model.add_hopping(key, t);
    } else if (neg < key) {
      if (dist(partner->second, t.adjoint()) > kTolAlg)
        throw SchemaError("/hoppings", "t(-n) differs from t(n)^dagger");
      model.add_hopping(key, t);
    }
  }

  if (doc.contains("symmetries")) {
    const json& sym = doc.at("symmetries");
    if (!sym.is_object()) throw SchemaError("/symmetries", "expected an object");
    for (const auto& [k, v] : sym.items())
      if (k != "chiral" && k != "trs" && k != "phs") throw SchemaError("/symmetries/" + k, "unknown symmetry");
    auto get = [&](const char* key) -> std::optional<Mat> {
      if (!sym.contains(key) || sym.at(key).is_null()) return std::nullopt;
      return complex_matrix(sym.at(key), n, std::string("/symmetries/") + key);
    };
    out.model.symmetries.chiral = get("chiral");
    out.model.symmetries.trs = get("trs");
    out.model.symmetries.phs = get("phs");
  }
  return out;
}

LoadedModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

json matrix_to_json(const Mat& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return {{"re", re}, {"im", im}};
}

json model_to_json(const ModelWithSymmetries& m) {
  json j;
  j["name"] = m.model.name();
  j["d"] = m.model.d();
  j["N"] = m.model.N();
  json hops = json::array();
  for (const auto& [n, t] : m.model.hoppings()) {
    json h = matrix_to_json(t);
    h["n"] = n;
    hops.push_back(std::move(h));
  }
  j["hoppings"] = std::move(hops);
  json sym = json::object();
  if (m.symmetries.chiral) sym["chiral"] = matrix_to_json(*m.symmetries.chiral);
  if (m.symmetries.trs) sym["trs"] = matrix_to_json(*m.symmetries.trs);
  if (m.symmetries.phs) sym["phs"] = matrix_to_json(*m.symmetries.phs);
  j["symmetries"] = std::move(sym);
  if (!m.model.parameters.empty()) j["parameters"] = m.model.parameters;
  return j;
}

}  // namespace tenfold
