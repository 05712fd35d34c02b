/**
 * @file hilbgw.cpp
 * @brief Command-line driver: every computation of the library as a
 *        subcommand emitting a versioned JSON (or CSV) report.
 *
 * Exit status: 0 success, 1 computational assertion failure, 2 usage error.
 * The cache directory for wk_cache.json is taken from HILBGW_CACHE_DIR.
 */
#include "hilbgw/acceptance.hpp"
#include "hilbgw/cohft.hpp"
#include "hilbgw/crepant.hpp"
#include "hilbgw/frobenius.hpp"
#include "hilbgw/jack.hpp"
#include "hilbgw/macdonald.hpp"
#include "hilbgw/reconstruct.hpp"
#include "hilbgw/report.hpp"
#include "hilbgw/rmatrix.hpp"
#include "hilbgw/wk_cache.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using hilbgw::Json;
using hilbgw::Partition;
using hilbgw::to_json;

/** @brief Invalid input detected after argument parsing. */
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** @brief A computed check did not hold. */
class AssertionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 2;
    int genus = 1;
    std::string insertions_text = "[]";
    std::vector<Partition> insertions;
    int q_order = 8;
    int z_order = 5;
    int u_order = 6;
    int max_deg = -1;  ///< -1: derived from q_order
    std::string basis = "flat";
    std::string format = "json";
    std::string output;
    unsigned threads = 1;
    bool reconstruct_rational = false;
    bool try_rational = false;
    bool macdonald = false;
    int wk_points = 0;  ///< 0: 3g + 1

    Json to_json() const {
        Json ins = Json::array();
        for (const auto& p : insertions) ins.push_back(p.parts());
        return Json{{"n", n},           {"genus", genus},     {"insertions", ins},  {"q_order", q_order},
                    {"z_order", z_order}, {"u_order", u_order}, {"max_deg", max_deg}, {"basis", basis},
                    {"format", format},   {"macdonald", macdonald},
                    {"cache_dir", hilbgw::cache_directory().string()}};
    }
    int effective_max_deg() const { return max_deg >= 0 ? max_deg : std::max(0, (q_order - 2) / 2); }
};

std::vector<Partition> parse_partition_list(const std::string& text, int n) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        throw UsageError("insertions: not a JSON list of partitions: " + text);
    }
    if (!j.is_array()) throw UsageError("insertions: expected a list of partitions");
    std::vector<Partition> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.empty()) throw UsageError("insertions: each partition must be a nonempty list of parts");
        std::vector<int> parts;
        for (const auto& x : p) {
            if (!x.is_number_integer() || x.get<int>() <= 0) throw UsageError("insertions: parts must be positive integers");
            parts.push_back(x.get<int>());
        }
        Partition mu(parts);
        if (mu.size() != n) throw UsageError("insertions: partition " + mu.str() + " is not of size " + std::to_string(n));
        out.push_back(mu);
    }
    return out;
}

void require_positive_n(const RunConfig& c) {
    if (c.n < 1) throw UsageError("--n must be positive");
    if (c.q_order < 0 || c.z_order < 0 || c.u_order < 0) throw UsageError("orders must be nonnegative");
}

void require_stable(const RunConfig& c) {
    const int r = static_cast<int>(c.insertions.size());
    if (2 * c.genus - 2 + r <= 0) throw UsageError("unstable (genus, number of insertions)");
    if (c.genus > 2) throw UsageError("unsupported genus tier: genus must be at most 2");
    if (c.z_order < 3 * c.genus - 3 + r + 1)
        throw UsageError("--z-order must be at least 3g - 2 + r = " + std::to_string(3 * c.genus - 2 + r));
}

Json rational_form_json(const hilbgw::RationalQ& f) {
    Json num = Json::array(), den = Json::array();
    for (int k = 0; k <= f.num.degree(); ++k) num.push_back(to_json(f.num.coeff(k)));
    for (int k = 0; k <= f.den.degree(); ++k) den.push_back(to_json(f.den.coeff(k)));
    return Json{{"numerator", num}, {"denominator", den}, {"text", f.str()}};
}

// --- commands -------------------------------------------------------------

Json cmd_md_matrix(const RunConfig& c) {
    require_positive_n(c);
    auto basis = hilbgw::enumerate_partitions(c.n);
    return Json{{"basis", hilbgw::partitions_json(basis)}, {"matrix", to_json(hilbgw::build_MD(c.n, c.q_order))}};
}

Json cmd_eigen(const RunConfig& c) {
    require_positive_n(c);
    auto E = hilbgw::eigen_decompose(c.n, c.q_order);
    return Json{{"basis", hilbgw::partitions_json(E.basis)},
                {"eigenvalues", to_json(E.v)},
                {"delta", to_json(E.Delta)},
                {"unit_coordinates", to_json(E.a)},
                {"idempotents", to_json(E.idempotent_matrix())}};
}

Json cmd_fixed_points(const RunConfig& c) {
    require_positive_n(c);
    auto fp = hilbgw::fixed_point_classes(c.n);
    Json restr = Json::array();
    for (const auto& mu : fp.basis) {
        Json row = Json::array();
        for (const auto& eta : fp.basis) row.push_back(to_json(hilbgw::restriction(fp, mu, eta)));
        restr.push_back(row);
    }
    Json out{{"basis", hilbgw::partitions_json(fp.basis)},
             {"transition", to_json(fp.T)},
             {"inverse_transition", to_json(fp.Tinv)},
             {"norms", to_json(fp.norms)},
             {"eigenvalues", to_json(fp.eigenvalues)},
             {"restriction", restr}};
    if (c.macdonald) {
        Json h = Json::array();
        for (const auto& mu : fp.basis) h.push_back(Json{{"partition", mu.parts()}, {"schur_coefficients", to_json(hilbgw::macdonald_H(mu))}});
        out["macdonald_H"] = h;
    }
    return out;
}

Json cmd_rmatrix(const RunConfig& c) {
    require_positive_n(c);
    if (c.basis != "flat" && c.basis != "canonical") throw UsageError("--basis must be flat or canonical");
    auto E = hilbgw::eigen_decompose(c.n, c.q_order);
    auto R = hilbgw::compute_R(E, c.z_order);
    if (!hilbgw::symplectic_check(R, E)) throw AssertionFailure("R-matrix fails the symplectic condition");
    auto mats = c.basis == "flat" ? R.flat(E) : R.Rt;
    Json coeffs = Json::array();
    for (const auto& X : mats) coeffs.push_back(to_json(X));
    Json out{{"basis", hilbgw::partitions_json(E.basis)}, {"frame", c.basis}, {"coefficients", coeffs}, {"symplectic", true}};
    if (c.try_rational) {
        Json attempts = Json::array();
        int ok = 0, total = 0;
        for (std::size_t k = 0; k < mats.size(); ++k)
            for (std::size_t r = 0; r < mats[k].rows(); ++r)
                for (std::size_t col = 0; col < mats[k].cols(); ++col) {
                    ++total;
                    try {
                        auto f = hilbgw::rational_reconstruct(mats[k](r, col), c.effective_max_deg());
                        ++ok;
                        attempts.push_back(Json{{"z_power", k}, {"row", r}, {"col", col}, {"rational_form", rational_form_json(f)}});
                    } catch (const std::exception&) {
                        attempts.push_back(Json{{"z_power", k}, {"row", r}, {"col", col}, {"rational_form", nullptr}});
                    }
                }
        out["rational_attempts"] = Json{{"max_deg", c.effective_max_deg()}, {"succeeded", ok}, {"total", total}, {"entries", attempts}};
    }
    return out;
}

Json cmd_invariant(const RunConfig& c) {
    require_positive_n(c);
    require_stable(c);
    auto E = hilbgw::eigen_decompose(c.n, c.q_order);
    auto R = hilbgw::compute_R(E, c.z_order);
    auto s = hilbgw::reconstruct_invariant(c.genus, c.insertions, E, R, hilbgw::ActionConvention::Inverse, c.threads);
    Json out{{"coefficients", to_json(s)}};
    if (c.reconstruct_rational) {
        try {
            out["rational_form"] = rational_form_json(hilbgw::rational_reconstruct(s, c.effective_max_deg()));
            out["rational_status"] = "reconstructed";
        } catch (const std::exception& e) {
            out["rational_form"] = nullptr;
            out["rational_status"] = e.what();
        }
    }
    return out;
}

Json cmd_degree0(const RunConfig& c) {
    require_positive_n(c);
    if (!((c.genus == 1 && c.insertions.size() == 1) || (c.genus == 2 && c.insertions.empty())))
        throw UsageError("degree0 supports genus 1 with one insertion and genus 2 with none");
    auto E = hilbgw::eigen_decompose(c.n, 0);
    auto R = hilbgw::compute_R(E, c.z_order);
    auto hodge = hilbgw::derive_hodge_table();
    auto oracle = hilbgw::degree0_oracle(c.genus, c.insertions, c.n, hodge);
    auto rec = hilbgw::reconstruct_invariant(c.genus, c.insertions, E, R, hilbgw::ActionConvention::Inverse, c.threads)[0];
    if (oracle != rec) throw AssertionFailure("degree-0 oracle and reconstruction differ: " + oracle.str() + " vs " + rec.str());
    return Json{{"oracle", to_json(oracle)}, {"reconstruction", to_json(rec)}, {"equal", true}};
}

Json cmd_wk_table(const RunConfig& c) {
    if (c.genus < 0) throw UsageError("--genus must be nonnegative");
    const int points = c.wk_points > 0 ? c.wk_points : 3 * c.genus + 1;
    auto& table = hilbgw::global_psi_table();
    const auto path = hilbgw::wk_cache_path();
    std::size_t loaded = hilbgw::load_psi_cache(table, path);
    table.fill(c.genus, points);
    hilbgw::save_psi_cache(table, path);
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        if (key.first > c.genus || static_cast<int>(key.second.size()) > points) continue;
        if (!hilbgw::PsiIntegralTable::admissible(key.first, key.second)) continue;
        entries.push_back(Json{{"g", key.first}, {"exponents", key.second}, {"value", hilbgw::fraction_string(value)}});
    }
    return Json{{"entries", entries}, {"max_points", points}, {"cache_entries_loaded", loaded}};
}

Json cmd_crepant_compare(const RunConfig& c) {
    require_positive_n(c);
    require_stable(c);
    auto E = hilbgw::eigen_decompose(c.n, c.q_order);
    auto R = hilbgw::compute_R(E, c.z_order);
    auto s = hilbgw::reconstruct_invariant(c.genus, c.insertions, E, R, hilbgw::ActionConvention::Inverse, c.threads);
    Json ins = Json::array();
    for (const auto& p : c.insertions) ins.push_back(p.parts());
    Json out{{"invariant", Json{{"genus", c.genus}, {"insertions", ins}}}, {"coefficients", to_json(s)}};
    hilbgw::RationalQ form;
    try {
        form = hilbgw::rational_reconstruct(s, c.effective_max_deg());
    } catch (const std::exception& e) {
        out["reconstruction_succeeded"] = false;
        out["rational_form"] = nullptr;
        out["pole_at_minus_one"] = nullptr;
        out["status"] = e.what();
        return out;
    }
    auto rep = hilbgw::crepant_substitute(form, c.insertions, c.u_order);
    out["reconstruction_succeeded"] = true;
    out["rational_form"] = rational_form_json(form);
    out["pole_at_minus_one"] = rep.pole_at_minus_one;
    out["prefactor_exponent"] = rep.prefactor_exponent;
    if (!rep.pole_at_minus_one) {
        out["u_expansion"] = to_json(rep.u_expansion);
        out["prediction"] = to_json(rep.prediction);
        out["round_trip"] = hilbgw::crepant_round_trip(rep);
        bool real_pattern = true;
        for (int k = 0; k <= rep.u_expansion.order(); ++k) {
            hilbgw::ExtScalar x = (k % 2) ? hilbgw::ExtScalar::i() * rep.u_expansion[k] : rep.u_expansion[k];
            real_pattern = real_pattern && x.in_base_field();
        }
        out["odd_coefficients_times_i_real"] = real_pattern;
    }
    return out;
}

Json cmd_selftest(const RunConfig& c, bool& all_pass) {
    if (c.n < 1) throw UsageError("--n must be positive");
    hilbgw::AcceptanceOrders orders;
    orders.max_n_rmatrix = std::min(orders.max_n_rmatrix, c.n);
    hilbgw::AcceptanceContext ctx(orders, c.threads);
    Json criteria = Json::array();
    all_pass = true;
    for (const auto& run : hilbgw::acceptance_criteria()) {
        hilbgw::CriterionResult r;
        try {
            r = run(ctx);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        criteria.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        all_pass = all_pass && r.pass;
    }
    // Emit one small report per command, read it back and validate it against the schema.
    const auto dir = hilbgw::cache_directory() / "selftest";
    std::filesystem::create_directories(dir);
    Json validation = Json::array();
    auto emit = [&](const std::string& name, RunConfig cfg, auto&& fn) {
        Json doc = hilbgw::make_report(name, cfg.to_json(), fn(cfg));
        const auto file = dir / (name + ".json");
        std::ofstream(file) << doc.dump(1) << "\n";
        Json back;
        std::ifstream(file) >> back;
        auto errors = hilbgw::validate_report(back);
        validation.push_back(Json{{"command", name}, {"file", file.string()}, {"valid", errors.empty()}, {"errors", errors}});
        all_pass = all_pass && errors.empty();
    };
    RunConfig small;
    small.n = 2;
    small.q_order = 3;
    small.z_order = 3;
    emit("md-matrix", small, cmd_md_matrix);
    emit("eigen", small, cmd_eigen);
    emit("fixed-points", small, cmd_fixed_points);
    emit("rmatrix", small, cmd_rmatrix);
    RunConfig inv = small;
    inv.insertions = {Partition{2}};
    emit("invariant", inv, cmd_invariant);
    emit("degree0", inv, cmd_degree0);
    RunConfig crep = inv;
    crep.q_order = 8;
    emit("crepant-compare", crep, cmd_crepant_compare);
    RunConfig wk = small;
    wk.genus = 2;
    emit("wk-table", wk, cmd_wk_table);
    return Json{{"criteria", criteria}, {"schema_validation", validation}, {"all_pass", all_pass}};
}

// --- output ---------------------------------------------------------------

void flatten_csv(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten_csv(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten_csv(j[i], path + "." + std::to_string(i), os);
    } else {
        std::string v = j.is_string() ? j.get<std::string>() : j.dump();
        if (v.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            v = q + "\"";
        }
        os << path << "," << v << "\n";
    }
}

void write_report(const RunConfig& c, const Json& doc) {
    std::ostringstream os;
    if (c.format == "csv") {
        os << "path,value\n";
        flatten_csv(doc, "", os);
    } else {
        os << doc.dump(2) << "\n";
    }
    if (c.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.output);
        if (!f) throw UsageError("cannot write " + c.output);
        f << os.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Gromov-Witten theory of Hilb^n(C^2): R-matrix reconstruction and crepant comparison"};
    app.set_version_flag("--version", hilbgw::kLibraryVersion);
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--out", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");
    app.add_option("--threads", cfg.threads, "Worker threads for graph sums (results do not depend on it)")->check(CLI::PositiveNumber);

    auto add_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "Number of points")->required(); };
    auto add_q = [&](CLI::App* s) { s->add_option("--q-order", cfg.q_order, "Truncation order in q"); };
    auto add_z = [&](CLI::App* s) { s->add_option("--z-order", cfg.z_order, "Truncation order in z"); };
    auto add_ins = [&](CLI::App* s) {
        s->add_option("--genus", cfg.genus, "Genus");
        s->add_option("--insertions", cfg.insertions_text, "Insertions as a JSON list of partitions, e.g. \"[[2]]\"");
    };

    auto* md = app.add_subcommand("md-matrix", "Matrix of quantum multiplication by the divisor");
    add_n(md);
    add_q(md);
    auto* eig = app.add_subcommand("eigen", "Eigenvalues, idempotents and Delta of M_D");
    add_n(eig);
    add_q(eig);
    auto* fp = app.add_subcommand("fixed-points", "Fixed-point classes, norms and restrictions");
    add_n(fp);
    fp->add_flag("--macdonald", cfg.macdonald, "Also emit modified Macdonald polynomials");
    auto* rm = app.add_subcommand("rmatrix", "R-matrix of the quantum differential equation");
    add_n(rm);
    add_q(rm);
    add_z(rm);
    rm->add_option("--basis", cfg.basis, "flat or canonical")->check(CLI::IsMember({"flat", "canonical"}));
    rm->add_flag("--try-rational", cfg.try_rational, "Attempt rational reconstruction of every entry");
    rm->add_option("--max-deg", cfg.max_deg, "Degree bound for rational reconstruction");
    auto* inv = app.add_subcommand("invariant", "Invariant series by Givental-Teleman reconstruction");
    add_n(inv);
    add_q(inv);
    add_z(inv);
    add_ins(inv);
    inv->add_flag("--reconstruct-rational", cfg.reconstruct_rational, "Reconstruct the series as a rational function of q");
    inv->add_option("--max-deg", cfg.max_deg, "Degree bound for rational reconstruction");
    auto* d0 = app.add_subcommand("degree0", "Degree-0 invariant by localization and by reconstruction");
    add_n(d0);
    add_z(d0);
    add_ins(d0);
    auto* wk = app.add_subcommand("wk-table", "Psi-class intersection numbers (cached)");
    wk->add_option("--genus", cfg.genus, "Largest genus")->required();
    wk->add_option("--points", cfg.wk_points, "Largest number of marked points (default 3g+1)");
    auto* cc = app.add_subcommand("crepant-compare", "Substitute -q = e^{iu} into a reconstructed invariant");
    add_n(cc);
    add_q(cc);
    add_z(cc);
    add_ins(cc);
    cc->add_option("--u-order", cfg.u_order, "Truncation order in u");
    cc->add_option("--max-deg", cfg.max_deg, "Degree bound for rational reconstruction");
    auto* st = app.add_subcommand("selftest", "Run the acceptance suite and validate emitted reports");
    st->add_option("--n", cfg.n, "Largest n for the R-matrix criteria (at most 3)");
    cfg.n = 3;

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (sub == inv || sub == d0 || sub == cc) cfg.insertions = parse_partition_list(cfg.insertions_text, cfg.n);
        Json result;
        bool all_pass = true;
        if (sub == md) result = cmd_md_matrix(cfg);
        else if (sub == eig) result = cmd_eigen(cfg);
        else if (sub == fp) result = cmd_fixed_points(cfg);
        else if (sub == rm) result = cmd_rmatrix(cfg);
        else if (sub == inv) result = cmd_invariant(cfg);
        else if (sub == d0) result = cmd_degree0(cfg);
        else if (sub == wk) result = cmd_wk_table(cfg);
        else if (sub == cc) result = cmd_crepant_compare(cfg);
        else if (sub == st) result = cmd_selftest(cfg, all_pass);
        write_report(cfg, hilbgw::make_report(name, cfg.to_json(), result));
        return all_pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hilbgw::CacheCorrupted& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
