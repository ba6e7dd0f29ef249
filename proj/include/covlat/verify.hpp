#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covlat/completion.hpp"
#include "covlat/mcover.hpp"
#include "covlat/strip.hpp"

namespace covlat {

struct FamilyMember {
    std::string name;
    Poset poset;
};

/// All p_kl_path instances with k <= k_max, l <= l_max and a northeast word
/// of length <= word_max starting with N (or empty).
std::vector<FamilyMember> pkl_path_family(int k_max, int l_max, int word_max);

/// All bounded posets with at most max_size elements, up to isomorphism.
std::vector<FamilyMember> exhaustive_bounded_family(int max_size);

/// The members of the exhaustive family (>= 2 elements) whose Hasse diagram
/// minus the bottom is a tree rooted at the top.
std::vector<FamilyMember> tree_criterion_family(int max_size);

/// Does some p_kl_path(k, 1, N^s) match this poset up to isomorphism?
bool matches_pk1_north_shape(const Poset& p);

// Each suite returns one row per checked instance with an `ok` verdict;
// suites are deterministic and rows are emitted in grid order.

struct SizeLengthRow {
    std::string name;
    int n = 0, m = 0;
    long long size = 0, size_formula = 0;
    long long length = 0, length_formula = 0;
    bool ok = false;
};
std::vector<SizeLengthRow> suite_cover_size_length(const std::vector<FamilyMember>& family,
                                                   const std::vector<int>& ms);

struct LatticeEquivalenceRow {
    std::string name;
    int n = 0;
    bool lattice_all_m = false, tree_criterion = false, meet_condition = false;
    bool ok = false;
};
std::vector<LatticeEquivalenceRow> suite_lattice_equivalence(
    const std::vector<FamilyMember>& family, const std::vector<int>& ms);

struct ShellabilityRow {
    std::string name;
    int n = 0;
    bool two_plus_two_free = false, path_poset_shape = false, left_modular_all_m = false;
    bool ok = false;
};
std::vector<ShellabilityRow> suite_shellability_equivalence(
    const std::vector<FamilyMember>& family, const std::vector<int>& ms);

struct TrimRow {
    std::string name;
    int n = 0, m = 0;
    bool trim = false;
    bool claimed_shape = false;   // P iso to some p_kl_path(k,1,N^s)
    bool mobius_rule = false;     // checked when trim
    bool ok = false;              // trim == claimed_shape, and rule holds if trim
};
std::vector<TrimRow> suite_trim_characterization(const std::vector<FamilyMember>& family,
                                                 const std::vector<int>& ms);

struct CoverStatisticRow {
    int k = 0, l = 0, m = 0;
    std::string computed, predicted;
    bool ok = false;
};
std::vector<CoverStatisticRow> suite_cover_statistics(int k_max, int l_max,
                                                      const std::vector<int>& ms);
std::string polynomial_string(const std::vector<long long>& coeffs);

std::vector<TamariCompletionReport> suite_completion(
    const std::vector<std::pair<int, int>>& pairs, long long budget = kDefaultIsoBudget);

/// The ten fans the (4,2) completion is known to add, as step sequences.
const std::vector<std::vector<std::vector<int>>>& known_added_fans_4_2();

std::vector<ConjectureReport> suite_conjecture(int n_max, int m_max);

struct LeftModularAgreementRow {
    std::string source;
    int n = 0;
    bool agree = false;
};
std::vector<LeftModularAgreementRow> suite_left_modular_agreement(int exhaustive_max,
                                                                  int random_count,
                                                                  int random_max_proper,
                                                                  std::uint64_t seed);

struct TamariStructureRow {
    int n = 0, m = 0;
    long long count = 0, fuss = 0;
    bool irreducibles_checked = false;
    bool irreducibles_match = false;
    bool ok = false;
};
std::vector<TamariStructureRow> suite_tamari_structure(int n_max, int m_max, int irr_m_max);

struct StripRow {
    int n = 0, m = 0;
    long long paths = 0;
    bool round_trip = false;
    long long fans_formula = 0;
    long long fans_enumerated = -1;   // -1 when enumeration skipped
    bool image_characterization = true;
    bool ok = false;
};
std::vector<StripRow> suite_strip(int n_max, int m_max, int enum_n_max, int enum_m_max);

}  // namespace covlat
