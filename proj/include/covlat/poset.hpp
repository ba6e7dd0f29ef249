#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covlat/bitmatrix.hpp"
#include "covlat/errors.hpp"
#include "covlat/kernels.hpp"

namespace covlat {

/// Mobius function table of a poset; entries are meaningful where x <= y.
struct MobiusTable {
    int n = 0;
    std::vector<std::int64_t> values;

    std::int64_t at(int x, int y) const { return values[static_cast<std::size_t>(x) * n + y]; }
};

/// An immutable finite poset on dense indices 0..n-1 with a packed order
/// matrix. All accessors are pure and safe to call concurrently from multiple
/// threads; derived meet/join tables are built once on demand.
class Poset {
public:
    Poset() = default;

    /// Closes an arbitrary acyclic relation; covers are recomputed from the
    /// closure, never trusted from the input.
    static Poset from_relations(int n, std::span<const std::pair<int, int>> relations,
                                std::vector<std::string> labels = {});
    static Poset from_relations(int n, std::initializer_list<std::pair<int, int>> relations,
                                std::vector<std::string> labels = {});

    /// Accepts a full reflexive order matrix (row x = up-set of x); verifies
    /// reflexivity, antisymmetry and transitivity.
    static Poset from_leq(BitMatrix up, std::vector<std::string> labels = {});

    int size() const { return n_; }
    bool leq(int x, int y) const { return up_.get(x, y); }
    bool lt(int x, int y) const { return x != y && up_.get(x, y); }
    bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }
    bool covers(int x, int y) const { return cov_.get(x, y); }  // x is covered by y

    const BitMatrix& leq_matrix() const { return up_; }
    const BitMatrix& geq_matrix() const { return down_; }
    const BitMatrix& cover_matrix() const { return cov_; }
    const BitMatrix& cover_matrix_down() const { return covdown_; }

    /// Hasse edges (lower, upper), ascending by lower then upper index.
    std::vector<std::pair<int, int>> cover_pairs() const;
    long long cover_count() const;
    std::vector<int> upper_covers(int x) const;
    std::vector<int> lower_covers(int x) const;

    /// A fixed linear extension: topo_order()[t] is the element at position t.
    const std::vector<int>& topo_order() const { return topo_; }
    int topo_pos(int x) const { return topo_pos_[x]; }

    std::optional<int> minimum() const;
    std::optional<int> maximum() const;
    bool is_bounded() const { return n_ > 0 && minimum() && maximum(); }
    int bottom() const;  // throws precondition_error if no least element
    int top() const;     // throws precondition_error if no greatest element
    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;

    /// Edge count of the longest bottom-to-top saturated chain.
    int length() const;

    std::optional<int> meet(int x, int y) const;
    std::optional<int> join(int x, int y) const;
    bool is_lattice() const;

    std::vector<int> join_irreducibles() const;
    std::vector<int> meet_irreducibles() const;

    Poset induced(std::span<const int> elements) const;
    Poset interval(int x, int y) const;
    Poset direct_product(const Poset& other) const;
    Poset proper_part() const;
    Poset dual() const;

    bool is_two_plus_two_free() const;

    /// Cover-pair criterion for left-modularity of one element.
    bool is_left_modular_element(int x) const;
    /// Direct evaluation of the defining identity (q v x) ^ q' = q v (x ^ q');
    /// slower, kept as the independent route for cross-checking.
    bool left_modular_element_by_definition(int x) const;
    /// A saturated bottom-to-top chain of left-modular elements, if one
    /// exists; depth-first with ties broken by element index.
    std::optional<std::vector<int>> left_modular_chain() const;
    bool is_left_modular() const;

    bool is_extremal() const;
    bool is_trim() const;

    MobiusTable mobius() const;

    /// Every element is the least upper bound of the members of `s` below it
    /// (empty join = least element); dually for meet-density.
    bool is_join_dense(std::span<const int> s) const;
    bool is_meet_dense(std::span<const int> s) const;

    std::string to_dot() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int x) const;
    Poset with_labels(std::vector<std::string> labels) const;

    /// Down-/up-set rows whose columns are topological positions.
    const BitMatrix& down_by_topo() const { return down_t_; }
    const BitMatrix& up_by_topo() const { return up_t_; }
    const MeetJoinTables& tables() const;

private:
    static Poset finalize(BitMatrix up, std::vector<std::string> labels);

    int n_ = 0;
    BitMatrix up_, down_, cov_, covdown_, up_t_, down_t_;
    std::vector<int> topo_, topo_pos_;
    std::vector<std::string> labels_;

    struct Lazy;
    std::shared_ptr<Lazy> lazy_;
};

/// Reference implementations built straight from the definitions; quadratic
/// or worse, used by tests and the benchmark as independent oracles.
namespace reference {
std::optional<int> meet(const Poset& p, int x, int y);
std::optional<int> join(const Poset& p, int x, int y);
MobiusTable mobius(const Poset& p);
}  // namespace reference

}  // namespace covlat
