#include "ncpk/verify.hpp"

#include <functional>
#include <set>

#include "ncpk/formulas.hpp"
#include "ncpk/geometry.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/mdiv.hpp"
#include "ncpk/nc_poset.hpp"
#include "ncpk/parking.hpp"
#include "ncpk/paths.hpp"
#include "ncpk/typeb.hpp"

namespace ncpk {

bool VerificationReport::ok() const { return count(ClaimStatus::Fail) == 0; }

size_t VerificationReport::count(ClaimStatus s) const {
  size_t c = 0;
  for (const auto& r : claims) c += r.status == s;
  return c;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    default: return "OPEN";
  }
}

namespace {

struct Recorder {
  VerificationReport rep;
  std::string tag;
  void add(const std::string& id, const std::string& anchor, const BigCount& closed, const BigCount& observed,
           bool conjecture = false) {
    ClaimStatus s = closed == observed ? ClaimStatus::Pass : (conjecture ? ClaimStatus::Open : ClaimStatus::Fail);
    rep.claims.push_back({id + tag, anchor, closed, observed, s});
  }
  void flag(const std::string& id, const std::string& anchor, bool holds) {
    add(id, anchor, 1, holds ? 1 : 0);
  }
};

BigCount U(size_t x) { return BigCount(static_cast<unsigned long>(x)); }

void compositions(int n, int parts, std::vector<int>& cur, const std::function<void()>& f) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(n);
    f();
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= n; ++x) {
    cur.push_back(x);
    compositions(n - x, parts, cur, f);
    cur.pop_back();
  }
}

void verify_params(Recorder& R, KParams p, const VerifyOptions& opt) {
  const int N = p.N();
  R.tag = "[k=" + std::to_string(p.k) + ",n=" + std::to_string(p.n) + "]";

  auto nc = enumerate_nc(p);
  R.add("nc.cardinality", "|NC_{N;k}| = Ran(n,k+1,2)", nc_cardinality(p), U(nc.size()));
  size_t all_ok = 0, krew_ok = 0;
  for (const auto& w : nc) {
    all_ok += (N > 10 || is_k_indivisible_i(w, p.k)) && is_k_indivisible_ii(w, p.k) && is_k_indivisible_iii(w, p.k);
    krew_ok += is_k_indivisible_iii(kreweras(w), p.k);
  }
  R.add("nc.characterizations", "enumerated elements satisfy (i), (ii), (iii)", U(nc.size()), U(all_ok));
  R.add("nc.kreweras_stable", "Krew maps NC_{N;k} into itself", U(nc.size()), U(krew_ok));

  BigCount sum = 0;
  for (int l = 0; l <= p.n; ++l) sum += count_by_rank(p, l);
  R.add("counting.rank_sum", "sum of rank counts = Ran(n,k+1,2)", nc_cardinality(p), sum);
  R.add("counting.zeta_two", "Z(2) = |NC_{N;k}|", nc_cardinality(p), zeta(p, 2));
  R.add("counting.mobius_is_zeta", "mu = Z(-1)", mobius_invariant(p), zeta(p, -1));
  R.add("counting.determinant", "det M_{n;k} = Ran(n,k+1,2)", nc_cardinality(p), determinant_count(p.n, p.k));

  if (N <= std::min(opt.max_N, 13)) {
    HasseDiagram H = build_poset(p);
    auto census = rank_census(H);
    for (int l = 0; l <= p.n; ++l)
      R.add("poset.rank_" + std::to_string(l), "elements of rank l", count_by_rank(p, l), census[l]);
    R.add("poset.maximal_chains", "maximal chains = N^{n-1}", count_maximal_chains(p), brute_maximal_chains(H));
    for (int x = 2; x <= 4; ++x)
      R.add("poset.zeta_" + std::to_string(x), "multichains of length x-1 = Z(x)", zeta(p, x), brute_zeta(H, x));
    R.add("poset.mobius", "mu(id, c) = (-1)^n Ran(n,2k,1)", mobius_invariant(p), brute_mobius(H));
    for (int q = 1; q <= 2; ++q) {
      std::vector<int> cur;
      compositions(p.n, q + 1, cur, [&] {
        std::string id = "poset.jump";
        for (int x : cur) id += "_" + std::to_string(x);
        R.add(id, "multichains with rank jump vector r", count_multichains_by_jump(p, cur),
              brute_multichains_by_jump(H, cur));
      });
    }
  }

  if (count_maximal_chains(p) <= opt.max_states && N <= std::min(opt.max_N, 13)) {
    auto facts = enumerate_packed_factorizations(p, opt.max_states);
    R.add("hurwitz.count", "|Fact_k(c_N)| = N^{n-1}", count_maximal_chains(p), U(facts.size()));
    FactorizationCodec codec(p);
    Factorization f0 = codec.unpack(facts.front());
    R.add("hurwitz.orbit", "Hurwitz orbit is all of Fact_k(c_N)", count_maximal_chains(p),
          U(hurwitz_orbit_size(f0, opt.max_states)));
    auto classes = commutation_classes(p, opt.max_states);
    R.add("hurwitz.classes", "commutation classes = Ran(n,2k+1,1)", commutation_class_count(p), U(classes.size()));
    if (classes.size() <= 5000) {
      size_t round = 0;
      std::set<Dissection> seen;
      for (const auto& c : classes) {
        Dissection d = theta(c.representative);
        seen.insert(d);
        round += d.is_valid() && theta_inverse(d) == c.representative;
      }
      R.add("geometry.theta_roundtrip", "theta_inverse(theta(c)) = c", U(classes.size()), U(round));
      R.add("geometry.theta_injective", "theta is injective", U(classes.size()), U(seen.size()));
    }
    if (facts.size() <= 20000) {
      std::set<ParkingFunction> img;
      size_t back = 0;
      for (auto key : facts) {
        Factorization f = codec.unpack(key);
        ParkingFunction pf = phi(f);
        img.insert(pf);
        back += phi_inverse(pf) == f;
      }
      R.add("parking.bijective", "phi is a bijection onto k-parking functions", count_maximal_chains(p),
            U(img.size()));
      R.add("parking.inverse", "phi_inverse(phi(f)) = f", U(facts.size()), U(back));
    }
  }
  if (p.n <= 5) {
    R.add("parking.count", "k-parking functions = N^{n-1}", count_maximal_chains(p),
          U(enumerate_parking_functions(p.n, p.k).size()));
  }

  auto ideals = enumerate_ideals(p);
  R.add("nonnesting.ideals", "order ideals of Delta_{N;k} = Ran(n,k+1,2)", nc_cardinality(p), U(ideals.size()));
  size_t path_ok = 0;
  for (const auto& I : ideals) {
    auto path = ideal_to_path(I);
    auto sp = path_decompose(path, p);
    path_ok += path_to_ideal(path, p) == I && path_recombine(sp.first, sp.second) == path;
  }
  R.add("nonnesting.roundtrip", "ideal/path and path decomposition round-trip", U(ideals.size()), U(path_ok));
  std::set<OrderIdeal> nn;
  size_t gj_ok = 0;
  for (const auto& w : nc) {
    nn.insert(nc_to_nn(w, p));
    auto t = gj_tree(w);
    gj_ok += t.degrees_one_mod(p.k) && tour_readback(t) == w && expand_and_join(split_and_contract(t, p.k), p.k) == t;
  }
  R.add("nonnesting.nc_to_nn", "NC -> NN is injective", U(nc.size()), U(nn.size()));
  R.add("trees.pipeline", "tree degrees, readback, contraction round-trip", U(nc.size()), U(gj_ok));

  for (int m = 2; m <= opt.max_m; ++m) {
    if (mzeta(p, m, 2) > 400) continue;
    auto P = build_mposet(p, m);
    std::string ms = "m" + std::to_string(m);
    R.add("mdiv.size_" + ms, "|NC^(m)| = mzeta(2)", mzeta(p, m, 2), U(P.elements.size()));
    R.add("mdiv.zeta3_" + ms, "2-multichains = mzeta(3)", mzeta(p, m, 3), brute_mzeta(P, 3));
    R.add("mdiv.chains_" + ms, "maximal chains = m^n N^{n-1}", m_maximal_chains(p, m), brute_m_maximal_chains(P));
    R.add("mdiv.hat_" + ms, "Mobius with added bottom", m_mobius(p, m, MVariant::Hat),
          brute_m_mobius(P, MVariant::Hat));
    R.add("mdiv.bar_" + ms, "Mobius with merged minima", m_mobius(p, m, MVariant::Bar),
          brute_m_mobius(P, MVariant::Bar));
  }
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opt) {
  Recorder R;
  for (int k = 1; k <= opt.max_k; ++k)
    for (int n = 1; n <= opt.max_n; ++n) {
      KParams p(k, n);
      if (p.N() > 17) continue;
      verify_params(R, p, opt);
    }
  R.tag.clear();
  for (int n = 1; n <= std::min(opt.max_n, 8); ++n)
    for (int k = 1; k <= opt.max_k; ++k)
      R.flag("counting.alternating_recurrence[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]",
             "alternating binomial recurrence for Ran(n,k+1,2)", alternating_recurrence_check(n, k));
  if (opt.include_typeb) {
    for (int k = 1; k <= opt.max_k; ++k)
      for (int n = 1; k * n <= 4 && n <= opt.max_n; ++n) {
        auto r = typeb_report(k, n, 3);
        R.tag = "[k=" + std::to_string(k) + ",n=" + std::to_string(n) + "]";
        R.flag("typeb.product_preserved", "Hurwitz moves preserve the product", r.product_preserved);
        R.add("typeb.orbit", "orbit size k^{n-1} n^n", r.orbit_conjectured, U(r.orbit_observed), true);
        R.add("typeb.prefixes", "prefix count 2 C(nk+n-1, n-1)", r.prefix_conjectured, U(r.prefix_observed), true);
        for (const auto& z : r.zeta)
          R.add("typeb.zeta_" + std::to_string(z.q), "restricted zeta q C(nk(q-1)+n-1, n-1)", z.conjectured, z.observed,
                true);
      }
  }
  return R.rep;
}

}  // namespace ncpk
