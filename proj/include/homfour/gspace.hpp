#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homfour/gf.hpp"

namespace homfour {

using Point = std::vector<FieldElem>;
using PointView = std::span<const FieldElem>;

/// Element of the split torus (F_q^x)^k, written as exponents of the field's
/// fixed generator: g = (gamma^e_1, ..., gamma^e_k).
using TorusElem = std::vector<std::uint32_t>;

/// Integer matrix, row-major as a vector of rows.
using IntMatrix = std::vector<std::vector<int>>;

/// Default bound on q^r for vector-bundle spaces; HOMFOUR_SIZE_BOUND overrides.
inline constexpr long long kDefaultSizeBound = 2048;
long long size_bound_from_env();

/// Hard cap on the number of points of any single GSpace (products included).
inline constexpr std::size_t kMaxSpacePoints = std::size_t{1} << 23;

/// Diagonal action of (G_m)^k on m coordinates by characters:
/// (g_1..g_k) . (x_1..x_m) = (chi_j(g) x_j)_j, chi_j(g) = prod_i g_i^A[i][j].
class TorusAction {
 public:
  TorusAction(std::size_t rank, std::size_t coords, IntMatrix weights);

  static TorusAction trivial(std::size_t coords);
  /// Rank-1 scaling of every coordinate.
  static TorusAction homothety(std::size_t coords);
  /// Rank k acting on no coordinates: the classifying-stack model B(G_m^k).
  static TorusAction on_point(std::size_t rank);
  /// Block-diagonal action of a x b on the concatenated coordinates.
  static TorusAction direct_sum(const TorusAction& a, const TorusAction& b);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t coords() const noexcept { return coords_; }
  int weight(std::size_t i, std::size_t j) const { return weights_[i][j]; }
  const IntMatrix& weights() const noexcept { return weights_; }

 private:
  std::size_t rank_;
  std::size_t coords_;
  IntMatrix weights_;
};

class GSpace;
using GSpacePtr = std::shared_ptr<const GSpace>;

/// Isomorphism classes of the quotient groupoid [X / T](F_q): the T(F_q)-orbits
/// with their stabilizer orders. Orbits are ordered by representative, and the
/// representative is the lexicographically least point of the orbit.
class OrbitSet {
 public:
  struct Orbit {
    std::size_t rep;             // point index of the representative
    std::uint64_t size;          // number of points
    std::uint64_t stabilizer;    // order of the stabilizer in T(F_q)
  };

  std::size_t size() const noexcept { return orbits_.size(); }
  const Orbit& operator[](std::size_t c) const { return orbits_.at(c); }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t class_of(std::size_t point_index) const { return class_of_.at(point_index); }

 private:
  friend class GSpace;
  std::vector<Orbit> orbits_;
  std::vector<std::uint32_t> class_of_;
};

/// Finite set of F_q-points with a split-torus action, closed under the action.
/// Points are kept in lexicographic order of their element indices.
class GSpace {
 public:
  static GSpacePtr make(FieldPtr field, std::size_t coords, std::vector<Point> points, TorusAction action,
                        std::string label);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const TorusAction& action() const noexcept { return action_; }
  const std::string& label() const noexcept { return label_; }

  PointView point(std::size_t i) const {
    return {coords_flat_.data() + i * coords_, coords_};
  }
  std::optional<std::size_t> find(PointView x) const;
  std::size_t index_of(PointView x) const;

  /// Order of T(F_q) = (q-1)^rank.
  std::uint64_t torus_order() const noexcept { return torus_order_; }
  /// The i-th element of T(F_q) in mixed-radix order of exponents.
  TorusElem torus_elem(std::uint64_t i) const;
  Point act(const TorusElem& g, PointView x) const;

  const OrbitSet& orbits() const noexcept { return orbits_; }
  std::size_t class_of_point(PointView x) const { return orbits_.class_of(index_of(x)); }
  PointView class_rep(std::size_t c) const { return point(orbits_[c].rep); }

 private:
  GSpace(FieldPtr field, std::size_t coords, TorusAction action, std::string label);
  std::uint64_t code_of(PointView x) const;
  void build_orbits();
  void check_closed() const;

  FieldPtr field_;
  std::size_t coords_;
  TorusAction action_;
  std::string label_;
  std::uint64_t torus_order_ = 1;
  std::vector<FieldElem> coords_flat_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::int32_t> dense_index_;  // code -> index when the ambient is small
  OrbitSet orbits_;
};

inline const OrbitSet& orbit_set(const GSpace& space) { return space.orbits(); }

/// Raised when a candidate map fails equivariance; carries a witness (x, g).
class EquivarianceError : public std::invalid_argument {
 public:
  EquivarianceError(const std::string& what, Point x, TorusElem g)
      : std::invalid_argument(what), point_(std::move(x)), torus_elem_(std::move(g)) {}
  const Point& point() const noexcept { return point_; }
  const TorusElem& torus_elem() const noexcept { return torus_elem_; }

 private:
  Point point_;
  TorusElem torus_elem_;
};

class EquivariantMap;
using MapPtr = std::shared_ptr<const EquivariantMap>;

/// Map of G-spaces f: X -> Y covering the torus homomorphism
/// (F_q^x)^{k_src} -> (F_q^x)^{k_tgt} given by monomials: component i of the
/// image is prod_j g_j^M[i][j]. Equivariance f(g.x) = phi(g).f(x) is checked
/// on every point at construction.
class EquivariantMap {
 public:
  using PointFn = std::function<Point(PointView)>;

  static MapPtr make(GSpacePtr source, GSpacePtr target, const PointFn& f, IntMatrix gpmap, std::string name);

  const GSpacePtr& source() const noexcept { return source_; }
  const GSpacePtr& target() const noexcept { return target_; }
  const IntMatrix& gpmap() const noexcept { return gpmap_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t image(std::size_t src_point) const { return image_[src_point]; }
  /// Target class containing the image of a source class.
  std::size_t class_image(std::size_t src_class) const { return class_image_[src_class]; }
  TorusElem map_torus(const TorusElem& g) const;

 private:
  EquivariantMap() = default;
  void validate() const;

  GSpacePtr source_, target_;
  IntMatrix gpmap_;
  std::string name_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> class_image_;
};

/// g o f.
MapPtr compose(const MapPtr& g, const MapPtr& f);

// Building blocks.

/// V = F_q^r with the homothety action; r = 0 gives the point with G_m acting.
GSpacePtr build_V(const FieldPtr& field, std::size_t r, std::string label = "V",
                  long long bound = size_bound_from_env());
GSpacePtr build_V_dual(const FieldPtr& field, std::size_t r, long long bound = size_bound_from_env());
/// V = F_q^r with the trivial action (the scheme itself).
GSpacePtr build_V_scheme(const FieldPtr& field, std::size_t r, std::string label = "V",
                         long long bound = size_bound_from_env());
/// V minus its zero section, with homothety; its orbit set is P(V).
GSpacePtr build_V_punctured(const FieldPtr& field, std::size_t r, std::string label = "Vo",
                            long long bound = size_bound_from_env());
GSpacePtr build_A1(const FieldPtr& field);
GSpacePtr build_A1_scheme(const FieldPtr& field);
GSpacePtr build_Gm(const FieldPtr& field);
/// One point with a torus of the given rank acting trivially (rank 1: B G_m;
/// rank 0: Spec F_q).
GSpacePtr build_point(const FieldPtr& field, std::size_t rank, std::string label = "pt");

/// Cartesian product with the block-diagonal torus.
GSpacePtr product(const GSpacePtr& a, const GSpacePtr& b, std::string label);
/// The same points under another action.
GSpacePtr with_action(const GSpacePtr& space, TorusAction action, std::string label);
/// Points of `space` satisfying a predicate (must be a union of orbits).
GSpacePtr subspace(const GSpacePtr& space, const std::function<bool(PointView)>& keep, std::string label);

/// Normalized representatives of P(F_q^r): first nonzero coordinate 1, in
/// lexicographic order.
std::vector<Point> projective_points(const FieldCtx& field, std::size_t r);

/// <w, v> = sum_i w_i v_i.
FieldElem pairing(const FieldCtx& field, PointView w, PointView v);

/// Incident pairs (w_index, v_index) of projective representatives with
/// <w, v> = 0, sorted.
std::vector<std::pair<std::size_t, std::size_t>> incidence(const FieldCtx& field, std::size_t r);

// Map constructors.

/// Identity on points from a trivially-acted copy to an acted copy of the same
/// point set: quotient maps X -> [X/T].
MapPtr quotient_map(const GSpacePtr& scheme, const GSpacePtr& stack, std::string name = "quotient");
/// Projection of a product onto its first / second factor.
MapPtr first_projection(const GSpacePtr& prod, const GSpacePtr& first, std::string name = "pr1");
MapPtr second_projection(const GSpacePtr& prod, const GSpacePtr& second, std::string name = "pr2");
/// Pairing V^dual x V -> A^1 covering (t, s) -> ts.
MapPtr pairing_map(const GSpacePtr& dual_times_v, const GSpacePtr& a1, std::string name = "mu");
/// x -> (x, x) into the product, covering t -> (t, t).
MapPtr diagonal_map(const GSpacePtr& v, const GSpacePtr& v_times_v, std::string name = "diag");
/// (x, y) -> x - y on A^2 with a single diagonal G_m.
MapPtr difference_map(const GSpacePtr& a2_diag, const GSpacePtr& a1, std::string name = "difference");
/// Linear map F_q^r -> F_q^s given by an s x r matrix, between homothety spaces.
MapPtr linear_map(const GSpacePtr& v, const GSpacePtr& w, const std::vector<std::vector<FieldElem>>& matrix,
                  std::string name = "linear");
std::vector<std::vector<FieldElem>> transpose(const std::vector<std::vector<FieldElem>>& matrix);
/// Zero section B G_m -> V.
MapPtr zero_section(const GSpacePtr& point, const GSpacePtr& v, std::string name = "zero_section");
/// Structural map to a point; covers the projection onto the first
/// point-rank torus factors.
MapPtr structural_map(const GSpacePtr& space, const GSpacePtr& point, std::string name = "structural");
/// Inclusion of a subspace with the same torus.
MapPtr inclusion_map(const GSpacePtr& sub, const GSpacePtr& ambient, std::string name = "inclusion");

}  // namespace homfour
