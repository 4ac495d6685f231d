#include "ncpk/geometry.hpp"

#include "ncpk/formulas.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncpk {

namespace {

std::vector<std::vector<int>> split_faces(int two_n, const std::vector<std::pair<int, int>>& chords, bool& ok) {
  ok = true;
  std::vector<std::vector<int>> polys(1);
  for (int i = 1; i <= two_n; ++i) polys[0].push_back(i);
  for (auto [x, y] : chords) {
    bool placed = false;
    for (size_t f = 0; f < polys.size() && !placed; ++f) {
      auto& p = polys[f];
      auto ix = std::find(p.begin(), p.end(), x), iy = std::find(p.begin(), p.end(), y);
      if (ix == p.end() || iy == p.end()) continue;
      size_t i = ix - p.begin(), j = iy - p.begin();
      if (i > j) std::swap(i, j);
      std::vector<int> a(p.begin() + i, p.begin() + j + 1);
      std::vector<int> b(p.begin() + j, p.end());
      b.insert(b.end(), p.begin(), p.begin() + i + 1);
      p = std::move(a);
      polys.push_back(std::move(b));
      placed = true;
    }
    if (!placed) ok = false;
  }
  return polys;
}

std::vector<std::pair<int, int>> chords_of(const Dissection& D) {
  std::vector<std::pair<int, int>> c;
  for (const auto& d : D.diagonals) c.push_back({unbarred_pos(d.a), barred_pos(d.b)});
  return c;
}

Diagonal from_positions(int x, int y) {
  if (x % 2 == y % 2) throw std::logic_error("chord does not join an unbarred and a barred vertex");
  if (x % 2 == 0) std::swap(x, y);
  return {(x + 1) / 2, y / 2};
}

Permutation cycle_perm(int N, const Cycle& c) { return Permutation::cycle(N, c); }

}  // namespace

std::vector<std::vector<int>> Dissection::faces() const {
  bool ok;
  auto f = split_faces(2 * params.N(), chords_of(*this), ok);
  if (!ok) throw std::invalid_argument("crossing diagonals");
  return f;
}

bool Dissection::is_valid() const {
  const int N = params.N();
  for (const auto& d : diagonals)
    if (d.a < 1 || d.a > N || d.b < 1 || d.b > N) return false;
  bool ok;
  auto f = split_faces(2 * N, chords_of(*this), ok);
  if (!ok) return false;
  for (const auto& face : f)
    if (static_cast<int>(face.size()) != 2 * params.k + 2) return false;
  return true;
}

std::string Dissection::str() const {
  std::string s;
  for (const auto& d : diagonals) s += "(" + std::to_string(d.a) + "," + std::to_string(d.b) + "b)";
  return s.empty() ? "()" : s;
}

std::vector<ThetaDiagonal> theta_detailed(const Factorization& f) {
  const int N = f.params.N();
  const auto& hulls = f.factors;
  auto dist = [N](int a, int x) { return ((x - a) % N + N) % N; };
  auto contains = [](const Cycle& h, int x) { return std::find(h.begin(), h.end(), x) != h.end(); };
  std::vector<ThetaDiagonal> out;
  for (int a = 1; a <= N; ++a) {
    std::vector<const Cycle*> around;
    for (const auto& h : hulls)
      if (contains(h, a)) around.push_back(&h);
    auto nxt = [&](const Cycle& h) {
      int best = -1;
      for (int x : h)
        if (x != a && (best < 0 || dist(a, x) < dist(a, best))) best = x;
      return best;
    };
    auto prv = [&](const Cycle& h) {
      int best = -1;
      for (int x : h)
        if (x != a && (best < 0 || dist(a, x) > dist(a, best))) best = x;
      return best;
    };
    std::sort(around.begin(), around.end(),
              [&](const Cycle* x, const Cycle* y) { return dist(a, nxt(*x)) < dist(a, nxt(*y)); });
    for (size_t j = 0; j + 1 < around.size(); ++j) {
      const int s = nxt(*around[j + 1]);
      int x = prv(*around[j]);
      // walk across hulls avoiding a, as far clockwise as allowed
      for (;;) {
        int best = -1;
        for (const auto& h : hulls) {
          if (!contains(h, x) || contains(h, a)) continue;
          for (int y : h) {
            int dy = dist(a, y);
            if (dist(a, x) < dy && dy <= dist(a, s) && (best < 0 || dy > dist(a, best))) best = y;
          }
        }
        if (best < 0) break;
        x = best;
      }
      out.push_back({{a, x}, *around[j], *around[j + 1]});
    }
  }
  return out;
}

Dissection theta(const Factorization& f) {
  Dissection D{f.params, {}};
  for (const auto& t : theta_detailed(f)) D.diagonals.insert(t.d);
  return D;
}

Factorization theta_inverse(const Dissection& d) {
  const int N = d.params.N(), k = d.params.k;
  if (!d.is_valid()) throw std::invalid_argument("not a (2k+2)-angulation");
  std::vector<Cycle> hulls;
  for (const auto& face : d.faces()) {
    Cycle h;
    for (int pos : face)
      if (pos % 2) h.push_back((pos + 1) / 2);
    std::sort(h.begin(), h.end());
    if (static_cast<int>(h.size()) != k + 1) throw std::invalid_argument("face does not carry k+1 unbarred vertices");
    hulls.push_back(std::move(h));
  }
  const int n = static_cast<int>(hulls.size());
  // H before H' when they share a point and H H' is an increasing cycle
  std::vector<std::vector<int>> before(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool share = false;
      for (int x : hulls[i]) share = share || std::binary_search(hulls[j].begin(), hulls[j].end(), x);
      if (!share) continue;
      Permutation pr = cycle_perm(N, hulls[i]) * cycle_perm(N, hulls[j]);
      auto cs = pr.nontrivial_cycles();
      if (cs.size() == 1 && std::is_sorted(cs[0].begin(), cs[0].end())) before[j].push_back(i);
    }
  std::vector<int> done(n, 0);
  std::vector<Cycle> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (done[j]) continue;
      bool ready = true;
      for (int i : before[j]) ready = ready && done[i];
      if (ready && (best < 0 || hulls[j] < hulls[best])) best = j;
    }
    if (best < 0) throw std::invalid_argument("hull precedence is cyclic");
    done[best] = 1;
    order.push_back(hulls[best]);
  }
  return make_factorization(d.params, std::move(order));
}

CommClass theta_inverse_class(const Dissection& d) {
  Factorization f = theta_inverse(d);
  return {f, linear_extension_count(f)};
}

std::vector<int> rotation_context(const Dissection& D, Diagonal d) {
  if (!D.diagonals.count(d)) throw std::invalid_argument("diagonal not present");
  Dissection rest = D;
  rest.diagonals.erase(d);
  const int p = unbarred_pos(d.a), q = barred_pos(d.b);
  for (auto face : rest.faces()) {
    if (std::find(face.begin(), face.end(), p) == face.end() || std::find(face.begin(), face.end(), q) == face.end())
      continue;
    std::sort(face.begin(), face.end());
    return face;
  }
  throw std::logic_error("no face contains the diagonal");
}

Dissection rotate_diagonal(const Dissection& D, Diagonal d, Rotation dir) {
  auto u = rotation_context(D, d);
  const int two_h = static_cast<int>(u.size()), h = two_h / 2;
  int lo = std::min(unbarred_pos(d.a), barred_pos(d.b)), hi = std::max(unbarred_pos(d.a), barred_pos(d.b));
  int j = -1;
  for (int i = 0; i < h; ++i)
    if (u[i] == lo && u[i + h] == hi) j = i;
  if (j < 0) throw std::invalid_argument("rotation blocked: diagonal is not a long diagonal of its context");
  int s = dir == Rotation::CW ? 1 : two_h - 1;
  Dissection r = D;
  r.diagonals.erase(d);
  r.diagonals.insert(from_positions(u[(j + s) % two_h], u[(j + h + s) % two_h]));
  return r;
}

Factorization cambrian_bottom_factorization(KParams p) {
  std::vector<Cycle> f;
  for (int j = 0; j < p.n; ++j) {
    Cycle c;
    for (int x = j * p.k + 1; x <= j * p.k + p.k + 1; ++x) c.push_back(x);
    f.push_back(c);
  }
  return make_factorization(p, f);
}

Factorization cambrian_top_factorization(KParams p) {
  std::vector<Cycle> f;
  for (int j = 1; j < p.n; ++j) {
    Cycle c;
    for (int x = j * p.k + 1; x <= j * p.k + p.k + 1; ++x) c.push_back(x);
    f.push_back(c);
  }
  Cycle last;
  for (int x = 1; x <= p.k; ++x) last.push_back(x);
  last.push_back(p.N());
  f.push_back(last);
  return make_factorization(p, f);
}

namespace {

// Inside a merged (4k+2)-gon the chain of clockwise rotations starts at the
// diagonal joining attachment points ik+1 and (jk+1)bar of the bottom
// factorization (1 <= i < j <= n) with the largest barred end; the rotation
// arriving there wraps around and is not a cover.
std::pair<int, int> anchor_of(const std::vector<int>& u, int k, int n) {
  const int h = static_cast<int>(u.size()) / 2;
  std::pair<int, int> best{-1, -1};
  for (int j = 0; j < h; ++j) {
    int x = u[j], y = u[j + h];
    if (x % 2 == 0) continue;  // need unbarred first
    int a = (x + 1) / 2, b = y / 2;
    if ((a - 1) % k || (b - 1) % k) continue;
    int i1 = (a - 1) / k, j1 = (b - 1) / k;
    if (i1 < 1 || j1 <= i1 || j1 > n) continue;
    if (std::pair{y, x} > std::pair{best.second, best.first}) best = {x, y};
  }
  if (best.first < 0) throw std::logic_error("rotation context without an anchor diagonal");
  return best;
}

}  // namespace

CambrianLattice build_cambrian(KParams p, size_t max_classes) {
  if (commutation_class_count(p) > max_classes) throw BoundExceeded("build_cambrian: too many classes");
  CambrianLattice L;
  L.params = p;
  L.classes = commutation_classes(p);
  std::map<Dissection, int> index;
  for (const auto& c : L.classes) {
    L.dissections.push_back(theta(c.representative));
    index.emplace(L.dissections.back(), static_cast<int>(L.dissections.size()) - 1);
  }
  if (index.size() != L.classes.size()) throw std::logic_error("theta is not injective on classes");
  for (int v = 0; v < static_cast<int>(L.dissections.size()); ++v) {
    const auto& D = L.dissections[v];
    for (const auto& d : D.diagonals) {
      auto u = rotation_context(D, d);
      Dissection E = rotate_diagonal(D, d, Rotation::CW);
      auto anchor = anchor_of(u, p.k, p.n);
      Diagonal moved;
      for (const auto& e : E.diagonals)
        if (!D.diagonals.count(e)) moved = e;
      std::pair<int, int> mp{std::min(unbarred_pos(moved.a), barred_pos(moved.b)),
                             std::max(unbarred_pos(moved.a), barred_pos(moved.b))};
      if (mp == anchor) continue;
      auto it = index.find(E);
      if (it == index.end()) throw std::logic_error("rotation left the set of dissections");
      L.moves.push_back({v, it->second});
    }
  }
  L.order = FinitePoset::from_covers(static_cast<int>(L.classes.size()), L.moves);
  L.moves_are_covers = covers_are_irredundant(L.order, L.moves);
  auto mins = L.order.minimal_elements(), maxs = L.order.maximal_elements();
  if (mins.size() == 1) L.minimum = mins[0];
  if (maxs.size() == 1) L.maximum = maxs[0];
  auto bottom = theta(cambrian_bottom_factorization(p)), top = theta(cambrian_top_factorization(p));
  L.minimum_as_expected = L.minimum >= 0 && L.dissections[L.minimum] == bottom;
  L.maximum_as_expected = L.maximum >= 0 && L.dissections[L.maximum] == top;
  L.lattice_checked = L.classes.size() <= 3000;
  if (L.lattice_checked) L.lattice = check_lattice(L.order);
  return L;
}

std::string to_dot(const CambrianLattice& L) {
  std::ostringstream os;
  os << "digraph Cambrian {\n  rankdir=BT;\n";
  for (size_t i = 0; i < L.classes.size(); ++i)
    os << "  n" << i << " [label=\"" << L.classes[i].representative.str() << "\\n" << L.dissections[i].str()
       << "\"];\n";
  for (auto [x, y] : L.order.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ncpk
