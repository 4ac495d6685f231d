#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "ncpk/formulas.hpp"
#include "ncpk/geometry.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/mdiv.hpp"
#include "ncpk/nc.hpp"
#include "ncpk/nc_poset.hpp"
#include "ncpk/parking.hpp"
#include "ncpk/paths.hpp"
#include "ncpk/trees.hpp"
#include "ncpk/typeb.hpp"
#include "ncpk/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ncpk;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  int k = 1, n = 1, m = 2;
  long q = 2;
  int rank = -1;
  std::string jumps;
  std::string format = "text";
  std::string out;
  size_t max_states = kDefaultMaxStates;
  bool check = false;
  std::string input;
  std::string kind = "parking";
  std::string mode = "orbit";
  std::vector<long> raney_args;
  int max_n = 4, max_k = 3;
};

// Exact in JSON: small values as numbers, large ones as decimal strings.
json big(const BigCount& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json element_record(const Permutation& w, int k, int n) {
  json j;
  j["n"] = n;
  j["k"] = k;
  j["cycles"] = w.cycles();
  return j;
}

json dissection_record(const Dissection& d) {
  json j;
  j["two_n"] = 2 * d.params.N();
  json diags = json::array();
  for (const auto& g : d.diagonals) diags.push_back({g.a, std::to_string(g.b) + "b"});
  j["diagonals"] = diags;
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> r;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      r.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + s);
    }
  }
  return r;
}

Dissection parse_dissection(const std::string& s, KParams p) {
  static const std::regex re(R"(\(\s*(\d+)\s*,\s*(\d+)b\s*\))");
  Dissection d{p, {}};
  for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it)
    d.diagonals.insert({std::stoi((*it)[1]), std::stoi((*it)[2])});
  if (!d.is_valid()) throw std::invalid_argument("not a valid dissection: " + s);
  return d;
}

void require_format(const Opts& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format '" + o.format + "' not supported here");
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_check(std::ostream& os, const Opts& o, const char* label, const BigCount& closed, const BigCount& brute) {
  if (o.format == "text") os << label << " brute " << brute << (closed == brute ? " match\n" : " MISMATCH\n");
  if (closed != brute) throw CheckFailure(std::string(label) + ": closed form and brute force disagree");
}

void cmd_count(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  if (!o.raney_args.empty()) {
    BigCount r = raney(o.raney_args[0], o.raney_args[1], o.raney_args[2]);
    if (o.format == "json")
      os << json{{"raney", o.raney_args}, {"value", big(r)}}.dump(2) << "\n";
    else
      os << r << "\n";
    return;
  }
  KParams p(o.k, o.n);
  if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}, {"N", p.N()}};
    j["cardinality"] = big(nc_cardinality(p));
    json ranks = json::array();
    for (int l = 0; l <= p.n; ++l) ranks.push_back(big(count_by_rank(p, l)));
    j["by_rank"] = ranks;
    j["maximal_chains"] = big(count_maximal_chains(p));
    j["mobius"] = big(mobius_invariant(p));
    j["commutation_classes"] = big(commutation_class_count(p));
    if (o.m > 1) j["m_cardinality"] = {{"m", o.m}, {"value", big(m_cardinality(p, o.m))}};
    os << j.dump(2) << "\n";
    return;
  }
  os << (o.rank >= 0 ? count_by_rank(p, o.rank) : nc_cardinality(p)) << "\n";
}

void cmd_enumerate(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "csv"});
  KParams p(o.k, o.n);
  auto all = enumerate_nc(p);
  std::vector<std::pair<Permutation, int>> rows;
  for (const auto& w : all) {
    int r = *ell_k(w, p.k);
    if (o.rank < 0 || r == o.rank) rows.emplace_back(w, r);
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [w, r] : rows) arr.push_back(element_record(w, p.k, p.N()));
    os << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "index,rank,cycles\n";
    for (size_t i = 0; i < rows.size(); ++i) os << i << "," << rows[i].second << "," << rows[i].first.str() << "\n";
  } else {
    for (const auto& [w, r] : rows) os << w.str() << "\n";
  }
}

void cmd_poset(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "csv", "dot"});
  KParams p(o.k, o.n);
  HasseDiagram H = build_poset(p);
  if (o.format == "dot") {
    os << to_dot(H);
  } else if (o.format == "csv") {
    os << rank_census_csv(H);
  } else if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}, {"N", p.N()}};
    json els = json::array();
    for (int i = 0; i < H.size(); ++i) {
      json e = element_record(H.elements[i], p.k, p.N());
      e["rank"] = H.rank[i];
      els.push_back(e);
    }
    j["elements"] = els;
    j["covers"] = H.order.covers();
    os << j.dump(2) << "\n";
  } else {
    auto census = rank_census(H);
    os << "elements " << H.size() << "\ncovers " << H.order.covers().size() << "\nrank census";
    for (const auto& c : census) os << " " << c;
    os << "\n";
  }
}

void cmd_chains(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  KParams p(o.k, o.n);
  std::vector<int> r;
  if (!o.jumps.empty()) r = parse_int_list(o.jumps);
  BigCount closed = r.empty() ? count_maximal_chains(p) : count_multichains_by_jump(p, r);
  std::optional<BigCount> brute;
  if (o.check) {
    HasseDiagram H = build_poset(p);
    brute = r.empty() ? brute_maximal_chains(H) : brute_multichains_by_jump(H, r);
  }
  if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}};
    if (!r.empty()) j["jumps"] = r;
    j["closed_form"] = big(closed);
    if (brute) j["brute_force"] = big(*brute), j["match"] = closed == *brute;
    os << j.dump(2) << "\n";
  } else {
    os << closed << "\n";
  }
  if (brute) emit_check(os, o, "chains", closed, *brute);
}

void cmd_zeta(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  KParams p(o.k, o.n);
  BigCount closed = zeta(p, o.q);
  std::optional<BigCount> brute;
  if (o.check) {
    if (o.q < 1) throw UsageError("--check needs --q >= 1");
    brute = brute_zeta(build_poset(p), static_cast<int>(o.q));
  }
  if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}, {"q", o.q}, {"closed_form", big(closed)}};
    if (brute) j["brute_force"] = big(*brute), j["match"] = closed == *brute;
    os << j.dump(2) << "\n";
  } else {
    os << closed << "\n";
  }
  if (brute) emit_check(os, o, "zeta", closed, *brute);
}

void cmd_mobius(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  KParams p(o.k, o.n);
  BigCount closed = mobius_invariant(p);
  std::optional<BigCount> brute;
  if (o.check) brute = brute_mobius(build_poset(p));
  if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}, {"closed_form", big(closed)}, {"zeta_at_minus_one", big(zeta(p, -1))}};
    if (brute) j["brute_force"] = big(*brute), j["match"] = closed == *brute;
    os << j.dump(2) << "\n";
  } else {
    os << closed << "\n";
  }
  if (brute) emit_check(os, o, "mobius", closed, *brute);
}

void cmd_mdiv(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "dot"});
  KParams p(o.k, o.n);
  if (o.m < 1) throw UsageError("--m must be positive");
  if (o.format == "dot") {
    os << to_dot(build_mposet(p, o.m));
    return;
  }
  std::vector<int> r;
  if (!o.jumps.empty()) r = parse_int_list(o.jumps);
  json j{{"k", p.k}, {"n", p.n}, {"m", o.m}};
  j["cardinality"] = big(m_cardinality(p, o.m));
  j["zeta"] = {{"q", o.q}, {"value", big(mzeta(p, o.m, o.q))}};
  j["maximal_chains"] = big(m_maximal_chains(p, o.m));
  j["mobius_hat"] = big(m_mobius(p, o.m, MVariant::Hat));
  j["mobius_bar"] = big(m_mobius(p, o.m, MVariant::Bar));
  if (!r.empty()) j["rank_jump"] = {{"jumps", r}, {"value", big(m_rank_jump_count(p, o.m, r))}};
  bool ok = true;
  if (o.check) {
    MPoset P = build_mposet(p, o.m);
    json b;
    b["cardinality"] = P.elements.size();
    if (o.q >= 1) b["zeta"] = big(brute_mzeta(P, static_cast<int>(o.q)));
    b["maximal_chains"] = big(brute_m_maximal_chains(P));
    b["mobius_hat"] = big(brute_m_mobius(P, MVariant::Hat));
    b["mobius_bar"] = big(brute_m_mobius(P, MVariant::Bar));
    if (!r.empty()) b["rank_jump"] = big(brute_m_rank_jump(P, r));
    ok = BigCount(static_cast<unsigned long>(P.elements.size())) == m_cardinality(p, o.m) &&
         (o.q < 1 || brute_mzeta(P, static_cast<int>(o.q)) == mzeta(p, o.m, o.q)) &&
         brute_m_maximal_chains(P) == m_maximal_chains(p, o.m) &&
         brute_m_mobius(P, MVariant::Hat) == m_mobius(p, o.m, MVariant::Hat) &&
         brute_m_mobius(P, MVariant::Bar) == m_mobius(p, o.m, MVariant::Bar) &&
         (r.empty() || brute_m_rank_jump(P, r) == m_rank_jump_count(p, o.m, r));
    j["brute_force"] = b;
    j["match"] = ok;
  }
  if (o.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    for (const auto& [key, val] : j.items()) {
      if (key == "k" || key == "n" || key == "m") continue;
      if (val.is_object()) {
        if (val.contains("value")) os << key << " " << val["value"] << "\n";
        else for (const auto& [k2, v2] : val.items()) os << key << "." << k2 << " " << v2 << "\n";
      } else {
        os << key << " " << val << "\n";
      }
    }
  }
  if (!ok) throw CheckFailure("m-divisible closed forms and brute force disagree");
}

Factorization start_factorization(KParams p, const Opts& o) {
  if (!o.input.empty()) return Factorization::parse(o.input, p);
  return cambrian_bottom_factorization(p);
}

void cmd_hurwitz(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  KParams p(o.k, o.n);
  if (o.mode == "orbit") {
    OrbitReport r = orbit_report(start_factorization(p, o), o.max_states);
    if (o.format == "json") {
      os << json{{"start", r.start.str()},
                 {"orbit_size", r.orbit_size},
                 {"expected", big(r.expected)},
                 {"transitive", r.transitive}}
                .dump(2)
         << "\n";
    } else {
      os << "start " << r.start.str() << "\norbit_size " << r.orbit_size << "\nexpected " << r.expected
         << "\ntransitive " << (r.transitive ? "true" : "false") << "\n";
    }
    if (!r.transitive) throw CheckFailure("orbit is not all of Fact");
  } else if (o.mode == "list") {
    auto all = enumerate_factorizations(p, o.max_states);
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& f : all) arr.push_back(f.str());
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& f : all) os << f.str() << "\n";
    }
  } else if (o.mode == "classes") {
    auto cls = commutation_classes(p, o.max_states);
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& c : cls) arr.push_back({{"representative", c.representative.str()}, {"size", big(c.size)}});
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& c : cls) os << c.representative.str() << " " << c.size << "\n";
    }
  } else {
    throw UsageError("unknown hurwitz mode: " + o.mode);
  }
}

void cmd_cambrian(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "dot"});
  KParams p(o.k, o.n);
  CambrianLattice L = build_cambrian(p, o.max_states);
  if (o.format == "dot") {
    os << to_dot(L);
  } else if (o.format == "json") {
    json j{{"k", p.k}, {"n", p.n}, {"size", L.classes.size()}};
    json ds = json::array();
    for (size_t i = 0; i < L.classes.size(); ++i) {
      json d = dissection_record(L.dissections[i]);
      d["representative"] = L.classes[i].representative.str();
      ds.push_back(d);
    }
    j["dissections"] = ds;
    j["covers"] = L.order.covers();
    j["minimum"] = L.minimum;
    j["maximum"] = L.maximum;
    j["lattice_checked"] = L.lattice_checked;
    j["is_lattice"] = L.lattice_checked && L.lattice.is_lattice;
    os << j.dump(2) << "\n";
  } else {
    os << "size " << L.classes.size() << "\ncovers " << L.order.covers().size() << "\nminimum "
       << L.dissections[L.minimum].str() << "\nmaximum " << L.dissections[L.maximum].str() << "\nlattice "
       << (L.lattice_checked ? (L.lattice.is_lattice ? "yes" : "no") : "unchecked") << "\n";
  }
}

void cmd_bijection(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  KParams p(o.k, o.n);
  std::vector<std::pair<std::string, std::string>> rows;
  if (o.kind == "parking") {
    if (!o.input.empty() && o.input.find('(') == std::string::npos) {
      ParkingFunction pf = ParkingFunction::parse(o.input, p.k);
      if (static_cast<int>(pf.entries.size()) != p.n || !is_parking_function(pf.entries, p.k))
        throw std::invalid_argument("not a parking function for these parameters");
      rows.emplace_back(pf.str(), phi_inverse(pf).str());
    } else if (!o.input.empty()) {
      Factorization f = Factorization::parse(o.input, p);
      rows.emplace_back(f.str(), phi(f).str());
    } else {
      for (const auto& f : enumerate_factorizations(p, o.max_states)) rows.emplace_back(f.str(), phi(f).str());
    }
  } else if (o.kind == "theta") {
    if (!o.input.empty() && o.input.find('b') != std::string::npos) {
      Dissection d = parse_dissection(o.input, p);
      rows.emplace_back(d.str(), theta_inverse(d).str());
    } else if (!o.input.empty()) {
      rows.emplace_back(o.input, theta(Factorization::parse(o.input, p)).str());
    } else {
      for (const auto& c : commutation_classes(p, o.max_states))
        rows.emplace_back(c.representative.str(), theta(c.representative).str());
    }
  } else if (o.kind == "tree") {
    auto one = [&](const Permutation& w) {
      auto [white, black] = split_and_contract(gj_tree(w), p.k);
      rows.emplace_back(w.str(), white.str() + " " + black.str());
    };
    if (!o.input.empty()) {
      Permutation w = Permutation::parse(o.input, p.N());
      if (!is_k_indivisible_iii(w, p.k)) throw std::invalid_argument("not in NC_{N;k}");
      one(w);
    } else {
      for (const auto& w : enumerate_nc(p)) one(w);
    }
  } else {
    throw UsageError("unknown bijection kind: " + o.kind);
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [a, b] : rows) arr.push_back({{"from", a}, {"to", b}});
    os << json{{"k", p.k}, {"n", p.n}, {"kind", o.kind}, {"pairs", arr}}.dump(2) << "\n";
  } else {
    for (const auto& [a, b] : rows) os << a << "\t" << b << "\n";
  }
}

void cmd_nonnesting(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "csv"});
  KParams p(o.k, o.n);
  std::vector<Permutation> ws;
  if (!o.input.empty()) {
    Permutation w = Permutation::parse(o.input, p.N());
    if (!is_k_indivisible_iii(w, p.k)) throw std::invalid_argument("not in NC_{N;k}");
    ws.push_back(w);
  } else {
    ws = enumerate_nc(p);
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& w : ws) {
      OrderIdeal I = nc_to_nn(w, p);
      arr.push_back({{"element", element_record(w, p.k, p.N())}, {"ideal", I.str()}, {"path", ideal_to_path(I)}});
    }
    os << arr.dump(2) << "\n";
  } else {
    const char sep = o.format == "csv" ? ',' : '\t';
    if (o.format == "csv") os << "element,ideal,path\n";
    for (const auto& w : ws) {
      OrderIdeal I = nc_to_nn(w, p);
      std::string is = I.str();
      if (o.format == "csv") is = "\"" + is + "\"";
      os << w.str() << sep << is << sep << ideal_to_path(I) << "\n";
    }
  }
}

void cmd_typeb(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json"});
  if (o.k < 1 || o.n < 1) throw UsageError("--k and --n must be positive");
  int max_q = o.q >= 1 ? static_cast<int>(o.q) : 3;
  TypeBReport r = typeb_report(o.k, o.n, max_q, o.max_states);
  json j{{"k", r.k}, {"n", r.n}, {"product_preserved", r.product_preserved}};
  j["orbit"] = {{"observed", r.orbit_observed}, {"conjectured", big(r.orbit_conjectured)},
                {"status", to_string(r.orbit_status)}};
  j["prefixes"] = {{"observed", r.prefix_observed}, {"conjectured", big(r.prefix_conjectured)},
                   {"status", to_string(r.prefix_status)}};
  json z = json::array();
  for (const auto& e : r.zeta)
    z.push_back({{"q", e.q}, {"observed", big(e.observed)}, {"conjectured", big(e.conjectured)},
                 {"status", to_string(e.status)}});
  j["zeta"] = z;
  if (o.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    os << "product_preserved " << (r.product_preserved ? "true" : "false") << "\n";
    os << "orbit " << r.orbit_observed << " conjectured " << r.orbit_conjectured << " " << to_string(r.orbit_status)
       << "\n";
    os << "prefixes " << r.prefix_observed << " conjectured " << r.prefix_conjectured << " "
       << to_string(r.prefix_status) << "\n";
    for (const auto& e : r.zeta)
      os << "zeta q=" << e.q << " " << e.observed << " conjectured " << e.conjectured << " " << to_string(e.status)
         << "\n";
  }
  if (!r.product_preserved) throw CheckFailure("Hurwitz move changed the product");
}

void cmd_verify(std::ostream& os, const Opts& o) {
  require_format(o, {"text", "json", "csv"});
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.max_k = o.max_k;
  vo.max_states = o.max_states;
  VerificationReport rep = run_verification(vo);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : rep.claims)
      arr.push_back({{"claim", c.claim_id},
                     {"anchor", c.anchor},
                     {"closed_form", big(c.closed_form)},
                     {"brute_force", big(c.observed)},
                     {"match", c.closed_form == c.observed},
                     {"status", to_string(c.status)}});
    os << json{{"claims", arr},
               {"pass", rep.count(ClaimStatus::Pass)},
               {"fail", rep.count(ClaimStatus::Fail)},
               {"open", rep.count(ClaimStatus::Open)}}
              .dump(2)
       << "\n";
  } else if (o.format == "csv") {
    os << "claim,closed_form,brute_force,status\n";
    for (const auto& c : rep.claims)
      os << c.claim_id << "," << c.closed_form << "," << c.observed << "," << to_string(c.status) << "\n";
  } else {
    for (const auto& c : rep.claims)
      os << to_string(c.status) << " " << c.claim_id << " closed=" << c.closed_form << " observed=" << c.observed
         << "\n";
    os << "summary pass=" << rep.count(ClaimStatus::Pass) << " fail=" << rep.count(ClaimStatus::Fail)
       << " open=" << rep.count(ClaimStatus::Open) << "\n";
  }
  if (!rep.ok()) throw CheckFailure("verification failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncrossing partitions with k-divisible blocks: enumeration, bijections, verification"};
  app.require_subcommand(1);
  Opts o;

  auto params = [&](CLI::App* s) {
    s->add_option("--k", o.k, "cycle size minus one")->check(CLI::Range(1, 1000));
    s->add_option("--n", o.n, "number of factors")->check(CLI::Range(1, 1000));
  };
  auto common = [&](CLI::App* s, const std::string& fmt) {
    o.format = fmt;
    s->add_option("--format", o.format, "json|csv|dot|text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    s->add_option("--out", o.out, "write to file instead of stdout");
    s->add_option("--max-states", o.max_states, "state cap for searches");
  };

  using Handler = void (*)(std::ostream&, const Opts&);
  std::vector<std::pair<CLI::App*, Handler>> cmds;
  auto sub = [&](const char* name, const char* desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    common(s, "text");
    cmds.emplace_back(s, h);
    return s;
  };

  auto* count = sub("count", "closed-form counts", cmd_count);
  params(count);
  count->add_option("--rank", o.rank, "elements of a given rank");
  count->add_option("--m", o.m, "include the m-divisible cardinality (json)");
  count->add_option("--raney", o.raney_args, "Raney number n p r")->expected(3);

  auto* en = sub("enumerate", "list NC_{N;k}", cmd_enumerate);
  params(en);
  en->add_option("--rank", o.rank, "restrict to one rank");

  auto* poset = sub("poset", "Hasse diagram export", cmd_poset);
  params(poset);

  auto* chains = sub("chains", "maximal chains or rank-jump multichains", cmd_chains);
  params(chains);
  chains->add_option("--jumps", o.jumps, "rank jump vector, comma separated");
  chains->add_flag("--check", o.check, "compare with brute force on the explicit poset");

  auto* z = sub("zeta", "zeta polynomial Z(q)", cmd_zeta);
  params(z);
  z->add_option("--q", o.q, "argument of the zeta polynomial");
  z->add_flag("--check", o.check, "compare with brute force");

  auto* mob = sub("mobius", "Mobius invariant", cmd_mobius);
  params(mob);
  mob->add_flag("--check", o.check, "compare with brute force");

  auto* md = sub("mdiv", "m-divisible multichain poset", cmd_mdiv);
  params(md);
  md->add_option("--m", o.m, "chain length")->check(CLI::PositiveNumber);
  md->add_option("--q", o.q, "zeta argument");
  md->add_option("--jumps", o.jumps, "rank jump vector");
  md->add_flag("--check", o.check, "compare with brute force");

  auto* hw = sub("hurwitz", "Hurwitz action on factorizations", cmd_hurwitz);
  params(hw);
  hw->add_option("--start", o.input, "starting factorization, e.g. (1 2 3)|(3 4 5)");
  hw->add_option("--mode", o.mode, "orbit|list|classes")->check(CLI::IsMember({"orbit", "list", "classes"}));

  auto* cam = sub("cambrian", "lattice of dissections", cmd_cambrian);
  params(cam);

  auto* bij = sub("bijection", "parking, theta and tree bijections", cmd_bijection);
  params(bij);
  bij->add_option("--kind", o.kind, "parking|theta|tree")->check(CLI::IsMember({"parking", "theta", "tree"}));
  bij->add_option("--input", o.input, "single input instead of the full table");

  auto* nn = sub("nonnesting", "map to order ideals and lattice paths", cmd_nonnesting);
  params(nn);
  nn->add_option("--input", o.input, "single element in cycle notation");

  auto* tb = sub("typeb-orbit", "type B Hurwitz experiment", cmd_typeb);
  params(tb);
  tb->add_option("--q", o.q, "largest zeta argument");

  auto* ver = sub("verify", "closed forms against brute force", cmd_verify);
  ver->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  ver->add_option("--max-k", o.max_k)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto& [s, h] : cmds) {
      if (!s->parsed()) continue;
      std::ofstream file;
      if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw UsageError("cannot open " + o.out);
      }
      std::ostream& os = o.out.empty() ? std::cout : file;
      h(os, o);
    }
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
