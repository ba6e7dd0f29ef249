// Command-line front end: ingestion, construction, verification suites and
// export. Exit codes are a contract: 0 ok, 2 parse failure, 3 precondition
// violation, 4 claim failure, 5 search budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "covlat/generate.hpp"
#include "covlat/io.hpp"
#include "covlat/verify.hpp"

using namespace covlat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitClaimFailure = 4;
constexpr int kExitBudget = 5;

struct Options {
    std::string in_path, out_path, dot_path;
    std::string format;  // dot | json | csv (suites default to csv)
    std::uint64_t seed = 0;
    long long budget = kDefaultIsoBudget;
    bool timings = false;
};

void add_shared(CLI::App* cmd, Options& opt, bool with_in = true) {
    if (with_in) cmd->add_option("--in", opt.in_path, "input poset JSON file");
    cmd->add_option("--out", opt.out_path, "write the report here instead of stdout");
    cmd->add_option("--format", opt.format, "output format: dot, json or csv")
        ->check(CLI::IsMember({"dot", "json", "csv"}));
    cmd->add_option("--seed", opt.seed, "seed for randomized searches");
    cmd->add_option("--budget", opt.budget, "node budget for isomorphism searches");
}

/// Stream a report to --out or stdout.
void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw error("cannot open output file: " + opt.out_path);
    out << text;
}

void maybe_write_dot(const Options& opt, const Poset& p) {
    if (opt.dot_path.empty()) return;
    std::ofstream out(opt.dot_path);
    if (!out) throw error("cannot open output file: " + opt.dot_path);
    out << p.to_dot();
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw error("empty list");
    return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& csv) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw error("pairs must look like n:m");
        out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    if (out.empty()) throw error("empty pair list");
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- poset ----

int cmd_poset(const Options& opt, const std::string& checks_csv) {
    Poset p = poset_from_file(opt.in_path);
    maybe_write_dot(opt, p);
    if (opt.format == "dot") {
        emit(opt, p.to_dot());
        return kExitOk;
    }
    if (!checks_csv.empty()) {
        std::stringstream ss(checks_csv);
        std::string check;
        std::vector<std::string> parts;
        while (std::getline(ss, check, ',')) {
            bool value;
            if (check == "lattice") {
                value = p.is_lattice();
            } else if (check == "bounded") {
                value = p.is_bounded();
            } else if (check == "two-plus-two-free") {
                value = p.is_two_plus_two_free();
            } else if (check == "left-modular") {
                value = p.is_left_modular();
            } else if (check == "extremal") {
                value = p.is_extremal();
            } else if (check == "trim") {
                value = p.is_trim();
            } else if (check == "tree-criterion") {
                value = hasse_minus_bottom_is_rooted_tree(p);
            } else if (check == "condition-s") {
                value = satisfies_condition_s(p);
            } else {
                throw error("unknown check: " + check);
            }
            parts.push_back(check + ": " + bool_str(value));
        }
        std::string line;
        for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? ", " : "") + parts[i];
        emit(opt, line + "\n");
    } else if (opt.dot_path.empty()) {
        std::ostringstream os;
        os << "n " << p.size() << ", covers " << p.cover_count() << ", bounded "
           << bool_str(p.is_bounded()) << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

// --------------------------------------------------------------- mcover ----

int cmd_mcover(const Options& opt, int m, const std::string& json_out) {
    Poset base = poset_from_file(opt.in_path);
    MCoverPoset mc = mcover(base, m);
    if (opt.format == "dot") {
        emit(opt, mc.poset.to_dot());
        maybe_write_dot(opt, mc.poset);
        return kExitOk;
    }
    const long long c = base.cover_count();
    const long long k = base.size() > 1 ? static_cast<long long>(base.atoms().size()) : 0;
    std::ostringstream os;
    os << "size " << mc.poset.size() << " (formula "
       << mcover_size_formula(base.size(), c, k, m) << "), length " << mc.poset.length() << "\n";
    PredictedIrreducibles pred = mcover_irreducibles_predicted(base, m);
    os << "J " << mc.poset.join_irreducibles().size() << " (predicted " << pred.join_set.size()
       << "), M " << mc.poset.meet_irreducibles().size() << " (predicted "
       << pred.meet_set.size() << ")\n";
    if (m == 1)
        os << "isomorphic to input: " << bool_str(is_isomorphic(mc.poset, base, opt.budget))
           << "\n";
    emit(opt, os.str());
    maybe_write_dot(opt, mc.poset);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw error("cannot open output file: " + json_out);
        out << poset_to_json(mc.poset).dump(2) << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- tamari ----

int cmd_tamari(const Options& opt, int n, int m, const std::string& json_out) {
    RotationPoset t = mtamari(n, m);
    if (opt.format == "dot") {
        emit(opt, t.poset.to_dot());
        maybe_write_dot(opt, t.poset);
        return kExitOk;
    }
    std::ostringstream os;
    os << "elements " << t.poset.size() << ", J " << t.poset.join_irreducibles().size() << ", M "
       << t.poset.meet_irreducibles().size() << "\n";
    emit(opt, os.str());
    maybe_write_dot(opt, t.poset);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw error("cannot open output file: " + json_out);
        out << poset_to_json(t.poset).dump(2) << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------- dm ----

int cmd_dm(const Options& opt, int n, int m) {
    if (!opt.in_path.empty()) {
        Poset p = poset_from_file(opt.in_path);
        Completion dm = dm_completion(p);
        if (opt.format == "dot") {
            emit(opt, dm.lattice.to_dot());
            maybe_write_dot(opt, dm.lattice);
            return kExitOk;
        }
        json j{{"input_size", p.size()},
               {"completed_size", dm.lattice.size()},
               {"added_cuts", dm.added_count()}};
        emit(opt, j.dump(2) + "\n");
        maybe_write_dot(opt, dm.lattice);
        return kExitOk;
    }
    if (n < 1 || m < 1) throw error("dm: pass --in FILE or both -n and -m");
    TamariCompletionReport rep = verify_theorem_mtamari(n, m, opt.budget);
    emit(opt, completion_report_to_json(rep).dump(2) + "\n");
    return rep.ok() ? kExitOk : kExitClaimFailure;
}

// ---------------------------------------------------------------- strip ----

int cmd_strip(const Options& opt, int n, int m, bool counterexamples) {
    if (counterexamples) {
        CounterexampleReport rep = counterexample_checks();
        std::ostringstream os;
        os << "strip-inverse-order-preservation-fails: "
           << bool_str(rep.strip_inverse_not_order_preserving) << "\n"
           << "strip-componentwise-order-preservation-fails: "
           << bool_str(rep.strip_not_componentwise_order_preserving) << "\n"
           << "bounce-order-preservation-fails: " << bool_str(rep.bounce_not_order_preserving)
           << "\n";
        emit(opt, os.str());
        return rep.all_confirmed() ? kExitOk : kExitClaimFailure;
    }
    if (n < 1 || m < 1) throw error("strip: pass -n and -m, or --counterexamples");
    if (opt.format == "dot") throw error("strip emits csv or json, not dot");
    auto paths = enumerate_mdyck(n, m);
    auto serialize = [](const std::vector<MDyckPath>& fan) {
        std::string s;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i) s += "|";
            for (int j = 0; j < fan[i].n; ++j) {
                if (j) s += " ";
                s += std::to_string(fan[i].u[j]);
            }
        }
        return s;
    };
    std::ostringstream os;
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& p : paths) {
            DyckFan d = strip_decompose(p);
            DyckFan z = zeta(p);
            rows.push_back(json{{"u", p.u},
                                {"delta", fan_to_json(d.paths)},
                                {"zeta", fan_to_json(z.paths)},
                                {"zeta_delta_valid", is_valid_delta_fan(z)}});
        }
        os << rows.dump(2) << "\n";
    } else {
        os << "u,delta,zeta,zeta_delta_valid\n";
        for (const auto& p : paths) {
            DyckFan d = strip_decompose(p);
            DyckFan z = zeta(p);
            std::string u;
            for (int j = 0; j < p.n; ++j) u += (j ? " " : "") + std::to_string(p.u[j]);
            os << u << "," << serialize(d.paths) << "," << serialize(z.paths) << ","
               << bool_str(is_valid_delta_fan(z)) << "\n";
        }
    }
    emit(opt, os.str());
    return kExitOk;
}

// --------------------------------------------------------------- verify ----

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<bool> ok;

    std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
        return os.str();
    }
    std::string to_json() const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    int first_failure() const {
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) return static_cast<int>(i);
        return -1;
    }
};

int finish_suite(const Options& opt, const Table& table, const std::string& claim) {
    if (opt.format == "dot") throw error("verification suites emit csv or json, not dot");
    emit(opt, opt.format == "json" ? table.to_json() : table.to_csv());
    int bad = table.first_failure();
    if (bad >= 0) {
        std::cerr << "claim failed: " << claim << " at row " << bad << " (";
        for (std::size_t i = 0; i < table.header.size(); ++i)
            std::cerr << (i ? ", " : "") << table.header[i] << "=" << table.rows[bad][i];
        std::cerr << ")\n";
        return kExitClaimFailure;
    }
    return kExitOk;
}

int verify_theorem_1_1(const Options& opt, int exhaustive_n, const std::vector<int>& ms) {
    Table t;
    t.header = {"name", "n", "lattice_all_m", "tree_criterion", "meet_condition", "ok"};
    for (const auto& r : suite_lattice_equivalence(exhaustive_bounded_family(exhaustive_n), ms)) {
        t.rows.push_back({r.name, std::to_string(r.n), bool_str(r.lattice_all_m),
                          bool_str(r.tree_criterion), bool_str(r.meet_condition),
                          bool_str(r.ok)});
        t.ok.push_back(r.ok);
    }
    return finish_suite(opt, t, "theorem-1.1");
}

int verify_theorem_1_2(const Options& opt, int k_max, int l_max, int path_max, int tree_n,
                       const std::vector<int>& ms) {
    Table t;
    t.header = {"name", "n", "two_plus_two_free", "path_poset_shape", "left_modular_all_m", "ok"};
    auto family = pkl_path_family(k_max, l_max, path_max);
    for (auto& member : tree_criterion_family(tree_n)) family.push_back(std::move(member));
    for (const auto& r : suite_shellability_equivalence(family, ms)) {
        t.rows.push_back({r.name, std::to_string(r.n), bool_str(r.two_plus_two_free),
                          bool_str(r.path_poset_shape), bool_str(r.left_modular_all_m),
                          bool_str(r.ok)});
        t.ok.push_back(r.ok);
    }
    return finish_suite(opt, t, "theorem-1.2");
}

int verify_theorem_1_3(const Options& opt, int k_max, int l_max, int path_max,
                       const std::vector<int>& ms) {
    Table t;
    t.header = {"name", "n", "m", "trim", "claimed_shape", "mobius_rule", "ok"};
    for (const auto& r : suite_trim_characterization(pkl_path_family(k_max, l_max, path_max), ms)) {
        t.rows.push_back({r.name, std::to_string(r.n), std::to_string(r.m), bool_str(r.trim),
                          bool_str(r.claimed_shape), bool_str(r.mobius_rule), bool_str(r.ok)});
        t.ok.push_back(r.ok);
    }
    return finish_suite(opt, t, "theorem-1.3");
}

int verify_theorem_1_4(const Options& opt, const std::vector<std::pair<int, int>>& pairs) {
    Table t;
    t.header = {"n", "m", "input_size", "completed_size", "fuss", "isomorphic",
                "jm_restriction_isomorphic", "join_dense", "meet_dense", "ok"};
    for (const auto& r : suite_completion(pairs, opt.budget)) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.m),
                          std::to_string(r.input_size), std::to_string(r.completed_size),
                          std::to_string(r.fuss), bool_str(r.isomorphic),
                          bool_str(r.jm_restriction_isomorphic), bool_str(r.join_dense),
                          bool_str(r.meet_dense), bool_str(r.ok())});
        t.ok.push_back(r.ok());
    }
    return finish_suite(opt, t, "theorem-1.4");
}

int verify_prop_2_2(const Options& opt, int exhaustive_n, const std::vector<int>& ms) {
    Table t;
    t.header = {"name", "n", "m", "size", "size_formula", "length", "length_formula", "ok"};
    for (const auto& r : suite_cover_size_length(exhaustive_bounded_family(exhaustive_n), ms)) {
        t.rows.push_back({r.name, std::to_string(r.n), std::to_string(r.m),
                          std::to_string(r.size), std::to_string(r.size_formula),
                          std::to_string(r.length), std::to_string(r.length_formula),
                          bool_str(r.ok)});
        t.ok.push_back(r.ok);
    }
    return finish_suite(opt, t, "prop-2.2");
}

int verify_prop_2_15(const Options& opt, int k_max, int l_max, const std::vector<int>& ms) {
    Table t;
    t.header = {"k", "l", "m", "computed", "predicted", "ok"};
    for (const auto& r : suite_cover_statistics(k_max, l_max, ms)) {
        t.rows.push_back({std::to_string(r.k), std::to_string(r.l), std::to_string(r.m),
                          r.computed, r.predicted, bool_str(r.ok)});
        t.ok.push_back(r.ok);
    }
    return finish_suite(opt, t, "prop-2.15");
}

int verify_conjecture_cmd(const Options& opt, int n_max, int m_max) {
    Table t;
    t.header = {"n", "m", "path_count", "injective", "order_iso", "elapsed_ms"};
    for (const auto& r : suite_conjecture(n_max, m_max)) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.m),
                          std::to_string(r.path_count), bool_str(r.injective),
                          bool_str(r.order_iso),
                          std::to_string(opt.timings ? r.elapsed_ms : 0)});
        t.ok.push_back(r.isomorphic());
    }
    return finish_suite(opt, t, "conjecture");
}

int verify_counterexamples(const Options& opt) {
    CounterexampleReport rep = counterexample_checks();
    Table t;
    t.header = {"remark", "confirmed"};
    t.rows = {{"strip-inverse-not-order-preserving",
               bool_str(rep.strip_inverse_not_order_preserving)},
              {"strip-not-componentwise-order-preserving",
               bool_str(rep.strip_not_componentwise_order_preserving)},
              {"bounce-not-order-preserving", bool_str(rep.bounce_not_order_preserving)}};
    t.ok = {rep.strip_inverse_not_order_preserving,
            rep.strip_not_componentwise_order_preserving, rep.bounce_not_order_preserving};
    return finish_suite(opt, t, "counterexamples");
}

int verify_left_modular(const Options& opt, int exhaustive_n, int random_count, int random_max) {
    Table t;
    t.header = {"source", "n", "agree"};
    for (const auto& r :
         suite_left_modular_agreement(exhaustive_n, random_count, random_max, opt.seed)) {
        t.rows.push_back({r.source, std::to_string(r.n), bool_str(r.agree)});
        t.ok.push_back(r.agree);
    }
    return finish_suite(opt, t, "left-modular");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite poset and lattice toolkit: cover constructions, Tamari lattices, "
                 "completions and verification suites"};
    app.require_subcommand(1);

    Options opt;

    auto* poset_cmd = app.add_subcommand("poset", "inspect a poset from JSON");
    std::string checks;
    add_shared(poset_cmd, opt);
    poset_cmd->add_option("--check", checks,
                          "comma list: lattice,bounded,two-plus-two-free,left-modular,"
                          "extremal,trim,tree-criterion,condition-s");
    poset_cmd->add_option("--dot", opt.dot_path, "write a DOT rendering here");

    auto* mcover_cmd = app.add_subcommand("mcover", "build the m-cover of a poset");
    int m_arg = 1, n_arg = 0;
    std::string json_out;
    add_shared(mcover_cmd, opt);
    mcover_cmd->add_option("-m", m_arg, "cover parameter")->required();
    mcover_cmd->add_option("--dot", opt.dot_path, "write a DOT rendering here");
    mcover_cmd->add_option("--json", json_out, "dump the cover poset as JSON here");

    auto* tamari_cmd = app.add_subcommand("tamari", "build an m-Tamari lattice");
    add_shared(tamari_cmd, opt, false);
    tamari_cmd->add_option("-n", n_arg, "number of north steps")->required();
    tamari_cmd->add_option("-m", m_arg, "slope parameter")->required();
    tamari_cmd->add_option("--dot", opt.dot_path, "write a DOT rendering here");
    tamari_cmd->add_option("--json", json_out, "dump the lattice as JSON here");

    auto* dm_cmd = app.add_subcommand(
        "dm", "Dedekind-MacNeille completion of a poset or of a Tamari cover");
    int dm_n = 0, dm_m = 0;
    add_shared(dm_cmd, opt);
    dm_cmd->add_option("-n", dm_n, "Tamari parameter n");
    dm_cmd->add_option("-m", dm_m, "cover parameter m");
    dm_cmd->add_option("--dot", opt.dot_path, "write a DOT rendering of the completion");

    auto* strip_cmd = app.add_subcommand("strip", "strip decomposition and bouncing tables");
    bool ce = false;
    add_shared(strip_cmd, opt, false);
    strip_cmd->add_option("-n", n_arg, "number of north steps");
    strip_cmd->add_option("-m", m_arg, "slope parameter");
    strip_cmd->add_flag("--counterexamples", ce, "re-derive the order-preservation failures");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    int exhaustive_n = 6, tree_n = 7, k_max = 3, l_max = 3, path_max = 3;
    int n_max = 5, m_max = 4, lm_exh = 8, lm_random = 60, lm_random_max = 10;
    std::string ms_csv = "2,3", pairs_csv = "3:2,3:3,4:2,4:3,5:2";

    auto* v11 = verify_cmd->add_subcommand("theorem-1.1", "lattice property equivalences");
    add_shared(v11, opt, false);
    v11->add_option("--exhaustive-n", exhaustive_n, "largest poset size");
    v11->add_option("--m", ms_csv, "cover parameters, comma separated");

    auto* v12 = verify_cmd->add_subcommand("theorem-1.2", "left-modularity equivalences");
    add_shared(v12, opt, false);
    v12->add_option("--k-max", k_max, "largest chain part");
    v12->add_option("--l-max", l_max, "largest antichain part");
    v12->add_option("--path-max", path_max, "longest northeast word");
    v12->add_option("--tree-n", tree_n, "largest tree-criterion poset");
    v12->add_option("--m", ms_csv, "cover parameters, comma separated");

    auto* v13 = verify_cmd->add_subcommand("theorem-1.3", "trimness characterization");
    add_shared(v13, opt, false);
    v13->add_option("--k-max", k_max, "largest chain part");
    v13->add_option("--l-max", l_max, "largest antichain part");
    v13->add_option("--path-max", path_max, "longest northeast word");
    v13->add_option("--m", ms_csv, "cover parameters, comma separated");

    auto* v14 = verify_cmd->add_subcommand("theorem-1.4", "completions of Tamari covers");
    add_shared(v14, opt, false);
    v14->add_option("--pairs", pairs_csv, "n:m pairs, comma separated");

    auto* v22 = verify_cmd->add_subcommand("prop-2.2", "cover cardinalities and lengths");
    add_shared(v22, opt, false);
    v22->add_option("--exhaustive-n", exhaustive_n, "largest poset size");
    v22->add_option("--m", ms_csv, "cover parameters, comma separated");

    auto* v215 = verify_cmd->add_subcommand("prop-2.15", "cover statistics");
    add_shared(v215, opt, false);
    v215->add_option("--k-max", k_max, "largest chain part");
    v215->add_option("--l-max", l_max, "largest antichain part");
    v215->add_option("--m", ms_csv, "cover parameters, comma separated");

    auto* vconj = verify_cmd->add_subcommand("conjecture", "zeta order-isomorphism grid");
    add_shared(vconj, opt, false);
    vconj->add_option("--n-max", n_max, "largest path parameter");
    vconj->add_option("--m-max", m_max, "largest slope parameter");
    vconj->add_flag("--timings", opt.timings, "report wall-clock per cell (non-reproducible)");

    auto* vce = verify_cmd->add_subcommand("counterexamples", "order-preservation failures");
    add_shared(vce, opt, false);

    auto* vlm = verify_cmd->add_subcommand("left-modular", "criterion agreement");
    add_shared(vlm, opt, false);
    vlm->add_option("--exhaustive-n", lm_exh, "largest exhaustive lattice size");
    vlm->add_option("--random", lm_random, "number of random lattices");
    vlm->add_option("--random-max", lm_random_max, "largest random proper part");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*poset_cmd) return cmd_poset(opt, checks);
        if (*mcover_cmd) return cmd_mcover(opt, m_arg, json_out);
        if (*tamari_cmd) return cmd_tamari(opt, n_arg, m_arg, json_out);
        if (*dm_cmd) return cmd_dm(opt, dm_n, dm_m);
        if (*strip_cmd) return cmd_strip(opt, n_arg, m_arg, ce);
        if (*v11) return verify_theorem_1_1(opt, exhaustive_n, parse_int_list(ms_csv));
        if (*v12)
            return verify_theorem_1_2(opt, k_max, l_max, path_max, tree_n,
                                      parse_int_list(ms_csv));
        if (*v13) return verify_theorem_1_3(opt, k_max, l_max, path_max, parse_int_list(ms_csv));
        if (*v14) return verify_theorem_1_4(opt, parse_pairs(pairs_csv));
        if (*v22) return verify_prop_2_2(opt, exhaustive_n, parse_int_list(ms_csv));
        if (*v215) return verify_prop_2_15(opt, k_max, l_max, parse_int_list(ms_csv));
        if (*vconj) return verify_conjecture_cmd(opt, n_max, m_max);
        if (*vce) return verify_counterexamples(opt);
        if (*vlm) return verify_left_modular(opt, lm_exh, lm_random, lm_random_max);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
