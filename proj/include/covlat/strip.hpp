#pragma once

#include <optional>
#include <vector>

#include "covlat/dyck.hpp"

namespace covlat {

/// An m-tuple of classical Dyck paths with a common parameter n.
struct DyckFan {
    int n = 0;
    std::vector<MDyckPath> paths;

    friend auto operator<=>(const DyckFan&, const DyckFan&) = default;
};

/// Heightwise comparison of two classical Dyck paths (noncrossing order).
bool dominance_leq(const MDyckPath& a, const MDyckPath& b);

/// Memoized classical Tamari lattice, shared by the bouncing map.
const RotationPoset& classical_tamari(int n);

/// Splits the height sequence of an m-Dyck path into m interleaved classical
/// Dyck paths.
DyckFan strip_decompose(const MDyckPath& p);

bool is_increasing_fan(const DyckFan& f);

/// Interleaving condition characterizing the image of the strip
/// decomposition among increasing fans.
bool is_valid_delta_fan(const DyckFan& f);

/// Inverse of the strip decomposition; empty when the fan is not an image.
std::optional<MDyckPath> strip_compose(const DyckFan& f);

/// prod_{1<=i<=j<n} (i+j+2m)/(i+j), the number of increasing m-fans.
long long count_increasing_fans_formula(int n, int m);

std::vector<DyckFan> enumerate_increasing_fans(int n, int m);

/// Replaces positions i<j (0-based) by their Tamari meet and join.
DyckFan bounce_pair(const DyckFan& f, int i, int j);

enum class BounceOrder {
    FirstIndexMajor,  // (0,1),(0,2),...,(0,m-1),(1,2),... - the default
    Reversed,         // the same pairs applied back to front, for experiments
};

/// Pairwise meet/join normalization; the result is a Tamari multichain.
DyckFan bounce(const DyckFan& f, BounceOrder order = BounceOrder::FirstIndexMajor);

/// bounce after strip_decompose.
DyckFan zeta(const MDyckPath& p, BounceOrder order = BounceOrder::FirstIndexMajor);

/// Checks that zeta embeds the rotation order: injectivity plus the
/// biconditional p <= p' iff zeta(p) <= zeta(p') componentwise.
struct ConjectureReport {
    int n = 0, m = 0;
    long long path_count = 0;
    bool injective = false;
    bool order_iso = false;
    long long zeta_images_delta_valid = 0;  // recorded, not asserted
    long long elapsed_ms = 0;

    bool isomorphic() const { return injective && order_iso; }
};

ConjectureReport verify_conjecture(int n, int m);

/// Re-derives the three known failures of order preservation around the strip
/// decomposition and the bouncing map.
struct CounterexampleReport {
    bool strip_inverse_not_order_preserving = false;   // from dominance to rotation
    bool strip_not_componentwise_order_preserving = false;  // to componentwise rotation
    bool bounce_not_order_preserving = false;          // from dominance to rotation

    bool all_confirmed() const {
        return strip_inverse_not_order_preserving && strip_not_componentwise_order_preserving &&
               bounce_not_order_preserving;
    }
};

CounterexampleReport counterexample_checks();

}  // namespace covlat
