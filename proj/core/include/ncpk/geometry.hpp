#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncpk/hurwitz.hpp"
#include "ncpk/poset.hpp"

namespace ncpk {

// 2N-gon with vertices 1, 1bar, 2, 2bar, ... clockwise; unbarred i sits at
// position 2i-1 and barred i at position 2i.
inline int unbarred_pos(int a) { return 2 * a - 1; }
inline int barred_pos(int b) { return 2 * b; }

struct Diagonal {
  int a;  // unbarred endpoint
  int b;  // barred endpoint
  auto operator<=>(const Diagonal&) const = default;
};

struct Dissection {
  KParams params;
  std::set<Diagonal> diagonals;

  // Faces as lists of polygon positions in clockwise order.
  std::vector<std::vector<int>> faces() const;
  // Noncrossing, unbarred-to-barred, every face a (2k+2)-gon.
  bool is_valid() const;
  std::string str() const;  // "(16,3b)(5,14b)"
  bool operator==(const Dissection& o) const { return diagonals == o.diagonals; }
  bool operator<(const Dissection& o) const { return diagonals < o.diagonals; }
};

// A diagonal with the two hulls (factors) it separates at vertex a.
struct ThetaDiagonal {
  Diagonal d;
  Cycle first, second;  // consecutive hulls around a, clockwise
};

std::vector<ThetaDiagonal> theta_detailed(const Factorization& f);
// Depends only on the commutation class.
Dissection theta(const Factorization& f);
// Lexicographically least factorization of the class encoded by d.
Factorization theta_inverse(const Dissection& d);
CommClass theta_inverse_class(const Dissection& d);

enum class Rotation { CW, CCW };

// Rotate d one step inside the (4k+2)-gon formed by its two adjacent faces.
Dissection rotate_diagonal(const Dissection& D, Diagonal d, Rotation dir);
// The merged polygon (sorted positions) around d.
std::vector<int> rotation_context(const Dissection& D, Diagonal d);

struct CambrianLattice {
  KParams params;
  std::vector<CommClass> classes;
  std::vector<Dissection> dissections;  // dissections[i] = theta(classes[i])
  FinitePoset order;
  std::vector<std::pair<int, int>> moves;  // clockwise rotations taken as covers
  int minimum = -1, maximum = -1;
  bool moves_are_covers = false;
  bool minimum_as_expected = false;
  bool maximum_as_expected = false;
  bool lattice_checked = false;  // skipped above a size threshold
  LatticeCheck lattice;
};

inline constexpr size_t kDefaultCambrianBound = 200'000;

CambrianLattice build_cambrian(KParams p, size_t max_classes = kDefaultCambrianBound);

// (1..k+1)(k+1..2k+1)... and (k+1..2k+1)...(1..k,N)
Factorization cambrian_bottom_factorization(KParams p);
Factorization cambrian_top_factorization(KParams p);

std::string to_dot(const CambrianLattice& L);

}  // namespace ncpk
