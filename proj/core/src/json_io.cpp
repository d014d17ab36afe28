#include "supervar/json_io.hpp"

#include <json.hpp>

#include "supervar/detecting.hpp"
#include "supervar/errors.hpp"

namespace supervar {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rat_str(c));
  return out;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
  return v;
}

json matrix_to_json(const SparseMatrix& m) {
  json rows = json::array();
  for (const auto& [rc, v] : m.entries())
    rows.push_back(json::array({rc.first, rc.second, rat_str(v)}));
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = rows;
  return out;
}

SparseMatrix matrix_from_json(const json& j) {
  SparseMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.set(e.at(0).get<int>(), e.at(1).get<int>(),
          parse_rat(e.at(2).get<std::string>()));
  return m;
}

json algebra_to_json_obj(const LieSuperalgebra& a) {
  json j;
  j["family"] = family_name(a.family);
  j["params"] = a.params;
  j["parity"] = a.parity;
  json bracket = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jdx = 0; jdx < a.dim(); ++jdx)
      for (const auto& [k, c] : a.table[i][jdx])
        bracket.push_back(json::array({i, jdx, k, rat_str(c)}));
  j["bracket"] = bracket;
  j["cartan"] = a.cartan;
  json weights = json::array();
  for (const auto& w : a.weight) weights.push_back(vec_to_json(w));
  j["weights"] = weights;

  j["labels"] = a.labels;
  j["weight_len"] = a.weight_len;
  json cow = json::array();
  for (const auto& w : a.cartan_coweight) cow.push_back(vec_to_json(w));
  j["cartan_coweights"] = cow;
  if (a.weight_signs)
    j["weight_signs"] = *a.weight_signs;
  else
    j["weight_signs"] = nullptr;
  if (a.form) {
    json f = json::array();
    for (const auto& row : *a.form) f.push_back(vec_to_json(row));
    j["form"] = f;
  } else {
    j["form"] = nullptr;
  }
  j["defining_even_size"] = a.defining_even_size;
  json realization = json::array();
  for (const auto& m : a.realization) realization.push_back(matrix_to_json(m));
  j["realization"] = realization;
  if (a.parent) {
    j["parent"] = algebra_to_json_obj(*a.parent);
    json emb = json::array();
    for (const auto& v : a.embedding) emb.push_back(vec_to_json(v));
    j["embedding"] = emb;
  } else {
    j["parent"] = nullptr;
  }
  return j;
}

LieSuperalgebra algebra_from_json_obj(const json& j) {
  LieSuperalgebra a;
  a.family = family_from_name(j.at("family").get<std::string>());
  a.params = j.at("params").get<std::vector<int>>();
  a.parity = j.at("parity").get<std::vector<int>>();
  int n = static_cast<int>(a.parity.size());
  a.table.assign(n, std::vector<SparseVec>(n));
  for (const auto& row : j.at("bracket")) {
    int i = row.at(0).get<int>(), jj = row.at(1).get<int>(), k = row.at(2).get<int>();
    a.table[i][jj].emplace_back(k, parse_rat(row.at(3).get<std::string>()));
  }
  a.cartan = j.at("cartan").get<std::vector<int>>();
  for (const auto& w : j.at("weights")) a.weight.push_back(vec_from_json(w));
  a.labels = j.at("labels").get<std::vector<std::string>>();
  a.weight_len = j.at("weight_len").get<int>();
  for (const auto& w : j.at("cartan_coweights"))
    a.cartan_coweight.push_back(vec_from_json(w));
  if (!j.at("weight_signs").is_null())
    a.weight_signs = j.at("weight_signs").get<std::vector<int>>();
  if (!j.at("form").is_null()) {
    std::vector<Vec> f;
    for (const auto& row : j.at("form")) f.push_back(vec_from_json(row));
    a.form = std::move(f);
  }
  a.defining_even_size = j.at("defining_even_size").get<int>();
  for (const auto& m : j.at("realization"))
    a.realization.push_back(matrix_from_json(m));
  if (!j.at("parent").is_null()) {
    auto parent = std::make_shared<LieSuperalgebra>(
        algebra_from_json_obj(j.at("parent")));
    a.parent = parent;
    for (const auto& v : j.at("embedding")) a.embedding.push_back(vec_from_json(v));
  }
  return a;
}

}  // namespace

std::string algebra_to_json(const LieSuperalgebra& a) {
  return algebra_to_json_obj(a).dump(1) + "\n";
}

LieSuperalgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  return algebra_from_json_obj(j);
}

std::string module_to_json(const Supermodule& m, const std::string& algebra_ref) {
  json j;
  j["algebra_ref"] = algebra_ref;
  j["dim0"] = m.dim0;
  j["dim1"] = m.dim1;
  json action = json::array();
  for (int k = 0; k < static_cast<int>(m.action.size()); ++k)
    for (const auto& [rc, v] : m.action[k].entries())
      action.push_back(json::array({k, rc.first, rc.second, rat_str(v)}));
  j["action"] = action;
  return j.dump(1) + "\n";
}

Supermodule module_from_json(const std::string& text,
                             std::shared_ptr<const LieSuperalgebra> algebra) {
  json j = json::parse(text);
  Supermodule m;
  m.algebra = std::move(algebra);
  m.dim0 = j.at("dim0").get<int>();
  m.dim1 = j.at("dim1").get<int>();
  m.action.assign(m.algebra->dim(), SparseMatrix(m.dim(), m.dim()));
  for (const auto& row : j.at("action")) {
    int k = row.at(0).get<int>();
    if (k < 0 || k >= m.algebra->dim())
      throw IoError("action index outside the algebra basis");
    m.action[k].add(row.at(1).get<int>(), row.at(2).get<int>(),
                    parse_rat(row.at(3).get<std::string>()));
  }
  return m;
}

namespace {

std::vector<int> parse_two(const std::string& inner) {
  auto bar = inner.find('|');
  if (bar == std::string::npos) throw IoError("expected m|n parameters");
  return {std::stoi(inner.substr(0, bar)), std::stoi(inner.substr(bar + 1))};
}

}  // namespace

std::shared_ptr<const LieSuperalgebra> resolve_algebra_ref(const std::string& ref) {
  auto open = ref.find('(');
  if (open == std::string::npos || ref.back() != ')')
    throw IoError("bad algebra reference: " + ref);
  std::string head = ref.substr(0, open);
  std::string inner = ref.substr(open + 1, ref.size() - open - 2);

  if (head == "e" || head == "f") {
    auto parent = resolve_algebra_ref(inner);
    auto [sub, rep] = assemble_detecting(
        parent, head == "e" ? Detecting::E : Detecting::F);
    return std::make_shared<const LieSuperalgebra>(std::move(sub));
  }
  if (head == "gl")
    return std::make_shared<const LieSuperalgebra>(build(Family::GL, parse_two(inner)));
  if (head == "sl")
    return std::make_shared<const LieSuperalgebra>(build(Family::SL, parse_two(inner)));
  if (head == "psl") {
    auto p = parse_two(inner);
    return std::make_shared<const LieSuperalgebra>(build(Family::PSL, {p[0]}));
  }
  if (head == "osp")
    return std::make_shared<const LieSuperalgebra>(build(Family::OSP, parse_two(inner)));
  if (head == "P")
    return std::make_shared<const LieSuperalgebra>(
        build(Family::P, {std::stoi(inner) + 1}));
  if (head == "Q")
    return std::make_shared<const LieSuperalgebra>(
        build(Family::Q, {std::stoi(inner) + 1}));
  if (head == "q")
    return std::make_shared<const LieSuperalgebra>(
        build(Family::QHAT, {std::stoi(inner)}));
  throw IoError("unknown algebra reference: " + ref);
}

}  // namespace supervar
