#include "fourlines/les_chase.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "fourlines/chow.hpp"

namespace fourlines {

using nlohmann::json;

bool ChaseResult::has(const std::string& term, int q) const {
  auto it = determined.find(term);
  return it != determined.end() && it->second.count(q) > 0;
}

const mpq_class& ChaseResult::value(const std::string& term, int q) const {
  auto it = determined.find(term);
  if (it == determined.end()) throw std::out_of_range("chase: term not determined: " + term);
  return it->second.at(q);
}

const ChaseTargetResult& ChaseResult::target(const std::string& name) const {
  for (const auto& t : targets)
    if (t.name == name) return t;
  throw std::out_of_range("chase: no target named " + name);
}

namespace {

constexpr int kMaxQ = 4;  // ambient dimension bound for the long sequences

struct TermInfo {
  int dim = 0;                 // dimension of the term's space
  bool known = false;          // cohomology computed from bundle summands
  std::array<long, 5> h{};     // valid when known
};

struct Entry {
  // exactly one of: constant, or variable index
  bool is_var = false;
  int var = -1;
  mpq_class constant;
};

// one linear equation  sum coeff[j] * x_j = rhs
struct Equation {
  std::map<int, mpq_class> coeff;
  mpq_class rhs;
};

void rref(std::vector<Equation>& rows) {
  // eliminate column by column in ascending variable order
  std::set<int> cols;
  for (const auto& r : rows)
    for (const auto& [j, c] : r.coeff) (void)c, cols.insert(j);
  size_t next_row = 0;
  for (int j : cols) {
    size_t pr = next_row;
    while (pr < rows.size() && rows[pr].coeff.count(j) == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next_row], rows[pr]);
    Equation& pivot = rows[next_row];
    mpq_class inv = 1 / pivot.coeff[j];
    for (auto& [k, c] : pivot.coeff) c *= inv;
    pivot.rhs *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row) continue;
      auto it = rows[r].coeff.find(j);
      if (it == rows[r].coeff.end()) continue;
      mpq_class f = it->second;
      for (const auto& [k, c] : pivot.coeff) {
        mpq_class s = (rows[r].coeff.count(k) ? rows[r].coeff[k] : mpq_class(0)) - f * c;
        if (s == 0)
          rows[r].coeff.erase(k);
        else
          rows[r].coeff[k] = s;
      }
      rows[r].rhs -= f * pivot.rhs;
    }
    ++next_row;
    if (next_row == rows.size()) break;
  }
  for (const auto& r : rows)
    if (r.coeff.empty() && r.rhs != 0)
      throw ChaseInconsistencyError("chase: contradictory equations (0 = " +
                                    r.rhs.get_str() + ")");
}

}  // namespace

ChaseResult run_chase(const std::string& json_text) {
  json spec;
  try {
    spec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ChaseSpecError(std::string("chase: invalid JSON: ") + e.what());
  }
  auto fail = [](const std::string& msg) -> void { throw ChaseSpecError("chase: " + msg); };
  if (!spec.is_object() || spec.value("schema", 0) != 1)
    fail("expected an object with schema: 1");

  // spaces
  std::map<std::string, int> spaces;
  if (!spec.contains("spaces") || !spec["spaces"].is_object()) fail("missing spaces object");
  for (const auto& [name, dim] : spec["spaces"].items()) {
    if (!dim.is_number_integer() || dim.get<int>() < 0 || dim.get<int>() > kMaxQ)
      fail("space " + name + " must have integer dimension 0..4");
    spaces[name] = dim.get<int>();
  }

  // terms
  std::map<std::string, TermInfo> terms;
  if (!spec.contains("terms") || !spec["terms"].is_object()) fail("missing terms object");
  for (const auto& [name, t] : spec["terms"].items()) {
    if (!t.is_object() || !t.contains("space") || !t["space"].is_string())
      fail("term " + name + " needs a space");
    auto sp = spaces.find(t["space"].get<std::string>());
    if (sp == spaces.end()) fail("term " + name + " names an undeclared space");
    TermInfo info;
    info.dim = sp->second;
    if (t.contains("bundles")) {
      if (sp->second != 4) fail("term " + name + ": bundle summands need a 4-dimensional space");
      if (!t["bundles"].is_array() || t["bundles"].empty())
        fail("term " + name + ": bundles must be a nonempty array");
      info.known = true;
      for (const auto& b : t["bundles"]) {
        if (!b.is_array() || b.size() != 4) fail("term " + name + ": each summand is 4 degrees");
        std::array<int, 4> d{};
        for (int k = 0; k < 4; ++k) {
          if (!b[k].is_number_integer()) fail("term " + name + ": degrees must be integers");
          d[k] = b[k].get<int>();
        }
        auto h = kunneth_cohomology(d);
        for (int q = 0; q <= kMaxQ; ++q) info.h[q] += h[q];
      }
    }
    terms[name] = info;
  }

  // facts: known single values for unknown terms
  std::map<std::pair<std::string, int>, long> facts;
  if (spec.contains("facts")) {
    if (!spec["facts"].is_object()) fail("facts must be an object");
    for (const auto& [name, obj] : spec["facts"].items()) {
      auto ti = terms.find(name);
      if (ti == terms.end()) fail("fact names undeclared term " + name);
      if (ti->second.known) fail("fact targets the computable term " + name);
      if (!obj.is_object()) fail("facts for " + name + " must map q to values");
      for (const auto& [qs, v] : obj.items()) {
        int q = std::stoi(qs);
        if (q < 0 || q > kMaxQ) fail("fact for " + name + " has q out of range");
        if (!v.is_number_integer() || v.get<long>() < 0)
          fail("fact for " + name + " must be a nonnegative integer");
        facts[{name, q}] = v.get<long>();
      }
    }
  }

  // variables: one per (unknown term, q <= space dim)
  std::map<std::pair<std::string, int>, int> var_index;
  std::vector<std::pair<std::string, int>> var_names;
  for (const auto& [name, info] : terms) {
    if (info.known) continue;
    for (int q = 0; q <= info.dim; ++q) {
      if (facts.count({name, q})) continue;
      var_index[{name, q}] = int(var_names.size());
      var_names.emplace_back(name, q);
    }
  }

  // entry of the long exact sequence for (term, q)
  auto entry_for = [&](const std::string& name, int q) -> Entry {
    Entry e;
    const TermInfo& info = terms.at(name);
    if (q > info.dim) {
      e.constant = 0;
    } else if (info.known) {
      e.constant = info.h[q];
    } else if (auto f = facts.find({name, q}); f != facts.end()) {
      e.constant = f->second;
    } else {
      e.is_var = true;
      e.var = var_index.at({name, q});
    }
    return e;
  };

  // sequences
  if (!spec.contains("sequences") || !spec["sequences"].is_array()) fail("missing sequences");
  std::vector<std::array<std::string, 3>> seqs;
  for (const auto& s : spec["sequences"]) {
    if (!s.is_array() || s.size() != 3) fail("each sequence is a triple of term names");
    std::array<std::string, 3> tr;
    for (int k = 0; k < 3; ++k) {
      if (!s[k].is_string() || terms.find(s[k].get<std::string>()) == terms.end())
        fail("sequence names an undeclared term");
      tr[k] = s[k].get<std::string>();
    }
    seqs.push_back(std::move(tr));
  }

  // iterate: equations from zero-delimited runs; zeros grow as the system
  // determines more variables to vanish
  std::set<int> zero_vars;
  std::vector<Equation> reduced;
  std::map<int, mpq_class> solved;
  while (true) {
    std::vector<Equation> eqs;
    for (const auto& s : seqs) {
      std::vector<Entry> les;
      for (int q = 0; q <= kMaxQ; ++q)
        for (int k = 0; k < 3; ++k) les.push_back(entry_for(s[k], q));
      Equation cur;
      int sign = 1;
      bool open = false;
      auto flush = [&]() {
        if (open && (!cur.coeff.empty() || cur.rhs != 0)) eqs.push_back(cur);
        cur = Equation{};
        sign = 1;
        open = false;
      };
      for (const Entry& e : les) {
        bool is_zero = e.is_var ? zero_vars.count(e.var) > 0 : e.constant == 0;
        if (is_zero) {
          flush();
          continue;
        }
        open = true;
        if (e.is_var) {
          mpq_class c = (cur.coeff.count(e.var) ? cur.coeff[e.var] : mpq_class(0)) + sign;
          if (c == 0)
            cur.coeff.erase(e.var);
          else
            cur.coeff[e.var] = c;
        } else {
          cur.rhs -= sign * e.constant;
        }
        sign = -sign;
      }
      flush();
    }
    // also pin the variables already known to vanish
    for (int v : zero_vars) {
      Equation e;
      e.coeff[v] = 1;
      eqs.push_back(e);
    }
    rref(eqs);
    solved.clear();
    for (const auto& r : eqs)
      if (r.coeff.size() == 1) {
        const auto& [j, c] = *r.coeff.begin();
        solved[j] = r.rhs / c;
      }
    bool grew = false;
    for (const auto& [j, v] : solved)
      if (v == 0 && zero_vars.insert(j).second) grew = true;
    if (!grew) {
      reduced = std::move(eqs);
      break;
    }
  }

  ChaseResult result;
  for (const auto& [name, info] : terms)
    if (info.known)
      for (int q = 0; q <= info.dim; ++q) result.determined[name][q] = info.h[q];
  for (const auto& [key, v] : facts) result.determined[key.first][key.second] = v;
  for (const auto& [j, v] : solved) {
    const auto& [name, q] = var_names[j];
    if (v < 0)
      throw ChaseInconsistencyError("chase: " + name + " h^" + std::to_string(q) +
                                    " solves to a negative value");
    result.determined[name][q] = v;
  }

  // targets: single (term, q) readings or integer combinations, both reduced
  // against the solved system
  auto reduce_combo = [&](std::map<int, mpq_class> combo, mpq_class acc) -> ChaseTargetResult {
    ChaseTargetResult r;
    for (const auto& row : reduced) {
      if (row.coeff.empty()) continue;
      int lead = row.coeff.begin()->first;
      auto it = combo.find(lead);
      if (it == combo.end()) continue;
      mpq_class f = it->second / row.coeff.begin()->second;
      for (const auto& [k, c] : row.coeff) {
        mpq_class s = (combo.count(k) ? combo[k] : mpq_class(0)) - f * c;
        if (s == 0)
          combo.erase(k);
        else
          combo[k] = s;
      }
      acc += f * row.rhs;
    }
    r.determined = combo.empty();
    if (r.determined) r.value = acc;
    return r;
  };

  if (spec.contains("targets")) {
    if (!spec["targets"].is_array()) fail("targets must be an array");
    for (const auto& t : spec["targets"]) {
      if (!t.is_object() || !t.contains("name") || !t["name"].is_string())
        fail("each target needs a name");
      std::map<int, mpq_class> combo;
      mpq_class acc = 0;
      auto add = [&](const std::string& term, int q, long c) {
        if (terms.find(term) == terms.end()) fail("target names undeclared term " + term);
        Entry e = entry_for(term, q);
        if (e.is_var) {
          mpq_class s = (combo.count(e.var) ? combo[e.var] : mpq_class(0)) + c;
          if (s == 0)
            combo.erase(e.var);
          else
            combo[e.var] = s;
        } else {
          acc += c * e.constant;
        }
      };
      if (t.contains("combo")) {
        if (!t["combo"].is_array()) fail("target combo must be an array");
        for (const auto& part : t["combo"]) {
          if (!part.is_object() || !part.contains("term") || !part.contains("q"))
            fail("combo parts need term and q");
          add(part["term"].get<std::string>(), part["q"].get<int>(), part.value("c", 1L));
        }
      } else {
        if (!t.contains("term") || !t.contains("q")) fail("target needs term and q (or combo)");
        add(t["term"].get<std::string>(), t["q"].get<int>(), 1);
      }
      ChaseTargetResult r = reduce_combo(std::move(combo), acc);
      r.name = t["name"].get<std::string>();
      result.targets.push_back(std::move(r));
    }
  }
  return result;
}

const std::string& default_chase_spec() {
  static const std::string spec = R"JSON({
  "schema": 1,
  "spaces": {"X": 4, "Y": 3, "T": 2},
  "terms": {
    "OX":        {"space": "X", "bundles": [[0,0,0,0]]},
    "OXH":       {"space": "X", "bundles": [[1,1,1,1]]},
    "OX2H":      {"space": "X", "bundles": [[2,2,2,2]]},
    "OXmH":      {"space": "X", "bundles": [[-1,-1,-1,-1]]},
    "OXm2H":     {"space": "X", "bundles": [[-2,-2,-2,-2]]},
    "ThetaX":    {"space": "X", "bundles": [[2,0,0,0],[0,2,0,0],[0,0,2,0],[0,0,0,2]]},
    "ThetaXmH":  {"space": "X", "bundles": [[1,-1,-1,-1],[-1,1,-1,-1],[-1,-1,1,-1],[-1,-1,-1,1]]},
    "ThetaXm2H": {"space": "X", "bundles": [[0,-2,-2,-2],[-2,0,-2,-2],[-2,-2,0,-2],[-2,-2,-2,0]]},
    "ThetaXm3H": {"space": "X", "bundles": [[-1,-3,-3,-3],[-3,-1,-3,-3],[-3,-3,-1,-3],[-3,-3,-3,-1]]},
    "OY":        {"space": "Y"},
    "OYH":       {"space": "Y"},
    "OY2H":      {"space": "Y"},
    "OTH":       {"space": "T"},
    "ThetaXY":   {"space": "Y"},
    "ThetaXYmH": {"space": "Y"},
    "ThetaY":    {"space": "Y"},
    "ThetaYmH":  {"space": "Y"},
    "ThetaYT":   {"space": "T"},
    "ThetaT":    {"space": "T"}
  },
  "facts": {
    "ThetaY": {"0": 0},
    "ThetaT": {"0": 0}
  },
  "sequences": [
    ["OX", "OX2H", "OY2H"],
    ["OXmH", "OXH", "OYH"],
    ["OXm2H", "OX", "OY"],
    ["OY", "OYH", "OTH"],
    ["ThetaXm2H", "ThetaX", "ThetaXY"],
    ["ThetaXm3H", "ThetaXmH", "ThetaXYmH"],
    ["ThetaYmH", "ThetaXYmH", "OYH"],
    ["ThetaY", "ThetaXY", "OY2H"],
    ["ThetaYmH", "ThetaY", "ThetaYT"],
    ["ThetaT", "ThetaYT", "OTH"]
  ],
  "targets": [
    {"name": "h0(O_Y(2H))", "term": "OY2H", "q": 0},
    {"name": "h0(O_Y(H))", "term": "OYH", "q": 0},
    {"name": "h0(O_Y)", "term": "OY", "q": 0},
    {"name": "h3(O_Y)", "term": "OY", "q": 3},
    {"name": "h0(O_T(H))", "term": "OTH", "q": 0},
    {"name": "h2(O_T(H))", "term": "OTH", "q": 2},
    {"name": "h0(ThetaX|Y)", "term": "ThetaXY", "q": 0},
    {"name": "h2(ThetaX|Y)", "term": "ThetaXY", "q": 2},
    {"name": "h1(ThetaY(-H))", "term": "ThetaYmH", "q": 1},
    {"name": "h3(ThetaY(-H))", "term": "ThetaYmH", "q": 3},
    {"name": "h1(ThetaY)", "term": "ThetaY", "q": 1},
    {"name": "h2(ThetaY)", "term": "ThetaY", "q": 2},
    {"name": "h3(ThetaY)", "term": "ThetaY", "q": 3},
    {"name": "h1-h0(ThetaY|T)", "combo": [
      {"term": "ThetaYT", "q": 1, "c": 1},
      {"term": "ThetaYT", "q": 0, "c": -1}
    ]},
    {"name": "h2(ThetaY|T)", "term": "ThetaYT", "q": 2},
    {"name": "h1(ThetaT)", "term": "ThetaT", "q": 1},
    {"name": "h2(ThetaT)", "term": "ThetaT", "q": 2}
  ]
})JSON";
  return spec;
}

}  // namespace fourlines
