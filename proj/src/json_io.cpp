#include "comtet/json_io.hpp"

namespace comtet {

using nlohmann::json;

json matrix_to_json(const DistMatrix& m, const PatternSet& ps) {
  json j;
  j["n"] = m.n;
  json pats = json::array();
  for (const auto& pat : ps.patterns) {
    std::string w;
    for (int v : pat.values()) w += std::to_string(v);
    pats.push_back(w);
  }
  j["patterns"] = pats;
  j["rows"] = m.rows;
  return j;
}

DistMatrix matrix_from_json(const json& j) {
  DistMatrix m(j.at("n").get<int>());
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != m.n)
    throw invalid_input("matrix json: row count mismatch");
  for (int i = 0; i < m.n; ++i) {
    const auto& row = rows[i];
    if (static_cast<int>(row.size()) != m.n)
      throw invalid_input("matrix json: column count mismatch");
    for (int k = 0; k < m.n; ++k) m.rows[i][k] = row[k].get<long long>();
  }
  return m;
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json term;
    json exps = json::object();
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) exps[std::string(1, kVarNames[i])] = m.e[i];
    term["exps"] = exps;
    term["num"] = c.get_num().get_str();
    term["den"] = c.get_den().get_str();
    terms.push_back(term);
  }
  return terms;
}

MultiPoly poly_from_json(const json& j) {
  MultiPoly p;
  for (const auto& term : j) {
    Monomial m;
    for (const auto& [name, exp] : term.at("exps").items()) {
      bool found = false;
      for (int i = 0; i < kNumVars; ++i) {
        if (name.size() == 1 && name[0] == kVarNames[i]) {
          m.e[i] = static_cast<std::uint16_t>(exp.get<int>());
          found = true;
        }
      }
      if (!found) throw invalid_input("poly json: unknown variable " + name);
    }
    const Int num(term.at("num").get<std::string>());
    const Int den(term.at("den").get<std::string>());
    if (den == 0) throw invalid_input("poly json: zero denominator");
    Rat c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

json series_to_json(const Series& s) {
  json j = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    json entry;
    entry["z"] = n;
    entry["terms"] = poly_to_json(s[n]);
    j.push_back(entry);
  }
  return j;
}

Series series_from_json(const json& j) {
  if (j.empty()) throw invalid_input("series json: empty");
  Series s(static_cast<int>(j.size()) - 1);
  for (const auto& entry : j)
    s.set_coeff(entry.at("z").get<int>(), poly_from_json(entry.at("terms")));
  return s;
}

}  // namespace comtet
