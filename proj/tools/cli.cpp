#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "zigzag/correlations.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/json_io.hpp"
#include "zigzag/partition.hpp"
#include "zigzag/sampler.hpp"
#include "zigzag/spin.hpp"

namespace zigzag::cli {
namespace {

constexpr const char* kPolySchema = "zigzag.polynomial/1";
constexpr const char* kCorrelationSchema = "zigzag.correlation/1";
constexpr const char* kProfileSchema = "zigzag.profile/1";
constexpr const char* kVerifySchema = "zigzag.verify/1";
constexpr const char* kSampleSchema = "zigzag.sample/1";
constexpr const char* kHamiltonianSchema = "zigzag.hamiltonian/1";

// CLI11 does not split "-L=1"; turn it into "-L" "1".
std::vector<std::string> split_short_assignments(const std::vector<std::string>& args) {
    static const std::regex short_eq(R"(^-([A-Za-z])=(.*)$)");
    std::vector<std::string> out;
    for (const auto& a : args) {
        std::smatch m;
        if (std::regex_match(a, m, short_eq)) {
            out.push_back("-" + m[1].str());
            out.push_back(m[2].str());
        } else {
            out.push_back(a);
        }
    }
    return out;
}

Json poly_document(const LaurentPoly& p) {
    Json j;
    j["schema"] = kPolySchema;
    j["polynomial"] = poly_to_json(p);
    j["text"] = p.to_string();
    return j;
}

void attach_value(Json& j, const LaurentPoly& p, const std::optional<std::string>& q) {
    if (!q)
        return;
    const Rational q0 = parse_rational(*q);
    j["q"] = rational_to_json(q0);
    j["value"] = rational_to_json(eval(p, q0));
}

Rational require_open_unit(const std::string& text) {
    const Rational q0 = parse_rational(text);
    if (q0 <= 0 || q0 >= 1)
        throw PreconditionError("q must lie strictly between 0 and 1, got " + text);
    return q0;
}

struct SchemeArgs {
    std::string name = "interface";
    int K = 0;
    int L = 0;

    void add_to(CLI::App* app) {
        app->add_option("--scheme", name, "interface, rep1 or rep2")->check(CLI::IsMember({"interface", "rep1", "rep2"}));
        app->add_option("-K", K, "right length K (rep1)")->check(CLI::NonNegativeNumber);
        app->add_option("-L", L, "left length L (rep1)")->check(CLI::NonNegativeNumber);
    }
    WeightScheme make() const { return parse_scheme(name, K, L); }
};

// ---------------------------------------------------------------------------
// verify

struct Tally {
    long checked = 0;
    std::vector<Json> failures;

    void record(const IdentityReport& r) {
        ++checked;
        if (!r.holds)
            failures.push_back(report_to_json(r));
    }
    Json to_json() const {
        Json j;
        j["checked"] = checked;
        j["failed"] = failures.size();
        j["failures"] = failures;
        return j;
    }
};

IdentityReport norm_equality(const PinnedInstance& inst) {
    IdentityReport r;
    r.identity = "norm-equality";
    r.parameters = {{"K", inst.K}, {"L", inst.L}, {"N", inst.N}};
    r.lhs = norm_squared(inst.L, inst.K, inst.N);
    r.rhs = pinned_rep1(inst);
    const auto rep2 = pinned_rep2(inst);
    r.holds = r.lhs == r.rhs && r.rhs == rep2;
    if (r.rhs != rep2)
        r.note = "rep2 gives " + rep2.to_string();
    return r;
}

Json run_verify(int max_K, int max_L, int translation_box, bool inject_failure, bool& all_hold) {
    Tally rec1, rec2, pf, ave, tf, norm;
    long repinned_checked = 0;
    long repinned_held = 0;
    const std::vector<Rational> qs = {Rational(3, 10), Rational(1, 2), Rational(4, 5)};

    for (int K = 0; K <= max_K; ++K)
        for (int L = 0; L <= max_L; ++L)
            for (int N = 0; N <= K + L + 1; ++N) {
                const auto inst = PinnedInstance::make(K, L, N);
                if (N >= 1 && inst.M >= 1) {
                    rec1.record(verify_rec1(inst));
                    for (bool left : {true, false}) {
                        ++repinned_checked;
                        repinned_held += rec1_repinned_reading(inst, left).holds ? 1 : 0;
                    }
                }
                rec2.record(verify_rec2(inst));
                pf.record(verify_convolution(inst));
                norm.record(norm_equality(inst));
                for (const auto& q0 : qs) {
                    const auto a = verify_average_representation(inst, q0);
                    IdentityReport r;
                    r.identity = "ave";
                    r.parameters = {{"K", K}, {"L", L}, {"N", N}};
                    r.holds = a.holds;
                    r.note = "q=" + to_string(q0) + " lhs=" + to_string(a.lhs) + " rhs=" + to_string(a.rhs);
                    if (a.ratio)
                        r.note += " ratio=" + to_string(*a.ratio);
                    ave.record(r);
                }
            }

    if (inject_failure) {
        CustomTable t;
        t.table[horizontal_bond_into({1, 2})] = LaurentPoly::monomial(2);
        auto r = verify_rec1_with(WeightScheme::custom(t), 1, 2);
        r.note = "injected custom-table counterexample";
        rec1.record(r);
    }

    const int b = translation_box;
    for (int Pi = -b; Pi <= b; ++Pi)
        for (int Pj = -b; Pj <= b; ++Pj)
            for (int Ii = Pi; Ii <= b; ++Ii)
                for (int Ij = Pj; Ij <= b; ++Ij)
                    for (int Fi = Ii; Fi <= b; ++Fi)
                        for (int Fj = Ij; Fj <= b; ++Fj)
                            tf.record(verify_translation({Ii, Ij}, {Fi, Fj}, {Pi, Pj}));

    Json j;
    j["schema"] = kVerifySchema;
    j["grid"] = {{"max_K", max_K}, {"max_L", max_L}, {"translation_box", b}};
    Json ids;
    ids["rec1"] = rec1.to_json();
    ids["rec1"]["reading"] = "fixed rep1 weights, interior endpoints";
    ids["rec1"]["repinned_reading"] = {{"checked", repinned_checked}, {"held", repinned_held}};
    ids["rec2"] = rec2.to_json();
    ids["pf"] = pf.to_json();
    ids["ave"] = ave.to_json();
    ids["ave"]["q"] = Json::array({"3/10", "1/2", "4/5"});
    ids["TF"] = tf.to_json();
    ids["norm-equality"] = norm.to_json();
    j["identities"] = ids;

    all_hold = true;
    for (const Tally* t : {&rec1, &rec2, &pf, &ave, &tf, &norm})
        all_hold = all_hold && t->failures.empty();
    j["all_hold"] = all_hold;
    return j;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact path-ensemble partition functions and identities"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // partition
    auto* partition = app.add_subcommand("partition", "partition function of a rectangle or a pinned chain");
    SchemeArgs part_scheme;
    part_scheme.add_to(partition);
    std::string part_from = "0,0";
    std::string part_to;
    std::string pinned;
    int part_N = 0;
    std::optional<std::string> part_q;
    partition->add_option("--from", part_from, "start point i,j");
    partition->add_option("--to", part_to, "end point i,j");
    partition->add_option("--pinned", pinned, "pinned chain route: rep1, rep2 or convolution")
        ->check(CLI::IsMember({"rep1", "rep2", "convolution"}));
    partition->add_option("-N", part_N, "down spins (pinned)")->check(CLI::NonNegativeNumber);
    partition->add_option("--q", part_q, "also evaluate at this rational p/r");

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "interface closed form Z_q(n,m)");
    int cf_n = 0;
    int cf_m = 0;
    std::optional<std::string> cf_q;
    closed->add_option("-n", cf_n)->required();
    closed->add_option("-m", cf_m)->required();
    closed->add_option("--q", cf_q, "also evaluate at this rational p/r");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "conditioned partition function and crossing probability");
    SchemeArgs corr_scheme;
    corr_scheme.add_to(correlate);
    std::string corr_from = "0,0";
    std::string corr_to;
    std::vector<std::string> through;
    std::string corr_q;
    correlate->add_option("--from", corr_from, "start point i,j");
    correlate->add_option("--to", corr_to, "end point i,j")->required();
    correlate->add_option("--through", through, "waypoint i,j (repeatable, in path order)");
    correlate->add_option("--q", corr_q, "rational p/r in (0,1)")->required();

    // profile
    auto* profile = app.add_subcommand("profile", "down-spin probability per site of a pinned chain");
    int prof_K = 0;
    int prof_L = 0;
    int prof_N = 0;
    std::string prof_q;
    std::string prof_format = "csv";
    profile->add_option("-K", prof_K)->required()->check(CLI::NonNegativeNumber);
    profile->add_option("-L", prof_L)->required()->check(CLI::NonNegativeNumber);
    profile->add_option("-N", prof_N)->required()->check(CLI::NonNegativeNumber);
    profile->add_option("--q", prof_q, "rational p/r in (0,1)")->required();
    profile->add_option("--format", prof_format)->check(CLI::IsMember({"csv", "json"}));

    // norm
    auto* norm = app.add_subcommand("norm", "squared norm of the sector ground state, or one amplitude");
    int norm_L = 0;
    int norm_K = 0;
    int norm_N = 0;
    std::optional<std::string> config;
    std::optional<std::string> norm_q;
    norm->add_option("-L", norm_L)->required()->check(CLI::NonNegativeNumber);
    norm->add_option("-K", norm_K)->required()->check(CLI::NonNegativeNumber);
    norm->add_option("-N", norm_N, "down spins (ignored with --config)")->check(CLI::NonNegativeNumber);
    norm->add_option("--config", config, "0/1 or +/- word from site -L to K; prints its amplitude");
    norm->add_option("--q", norm_q, "also evaluate at this rational p/r");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity suite over a parameter grid");
    int max_K = 3;
    int max_L = 3;
    int box = 2;
    bool inject = false;
    verify->add_option("--max-K", max_K)->check(CLI::Range(0, 6));
    verify->add_option("--max-L", max_L)->check(CLI::Range(0, 6));
    verify->add_option("--translation-box", box, "TF points range over [-b,b]^2")->check(CLI::Range(0, 3));
    verify->add_flag("--inject-failure", inject, "add a known failing custom-table rec1 instance");

    // sample
    auto* sample = app.add_subcommand("sample", "exact path sampling");
    SchemeArgs samp_scheme;
    samp_scheme.add_to(sample);
    std::string samp_from = "0,0";
    std::string samp_to;
    std::string samp_q;
    std::uint64_t seed = 0;
    std::uint64_t count = 10;
    unsigned workers = 1;
    sample->add_option("--from", samp_from, "start point i,j");
    sample->add_option("--to", samp_to, "end point i,j")->required();
    sample->add_option("--q", samp_q, "rational p/r in (0,1)")->required();
    sample->add_option("--seed", seed);
    sample->add_option("--n", count, "number of samples");
    sample->add_option("--workers", workers)->check(CLI::Range(1u, 64u));

    // hamiltonian
    auto* ham = app.add_subcommand("hamiltonian", "residual of the ground state under the dense Hamiltonian");
    int ham_L = 0;
    int ham_K = 0;
    int ham_N = 0;
    std::string ham_q;
    ham->add_option("-L", ham_L)->required()->check(CLI::NonNegativeNumber);
    ham->add_option("-K", ham_K)->required()->check(CLI::NonNegativeNumber);
    ham->add_option("-N", ham_N)->required()->check(CLI::NonNegativeNumber);
    ham->add_option("--q", ham_q, "rational p/r in (0,1)")->required();

    const auto args = split_short_assignments(raw_args);
    std::vector<const char*> argv;
    argv.push_back("zigzag");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*partition) {
            LaurentPoly z;
            Json j;
            if (!pinned.empty()) {
                const auto inst = PinnedInstance::make(part_scheme.K, part_scheme.L, part_N);
                z = pinned == "rep1" ? pinned_rep1(inst) : pinned == "rep2" ? pinned_rep2(inst) : pinned_via_convolution(inst);
                j = poly_document(z);
                j["pinned"] = {{"route", pinned}, {"K", inst.K}, {"L", inst.L}, {"N", inst.N}, {"M", inst.M}};
            } else {
                if (part_to.empty())
                    throw PreconditionError("--to is required unless --pinned is given");
                const auto s = part_scheme.make();
                const Point from = parse_point(part_from);
                const Point to = parse_point(part_to);
                z = partition_dp(s, from, to);
                j = poly_document(z);
                j["scheme"] = s.name();
                j["from"] = point_to_json(from);
                j["to"] = point_to_json(to);
            }
            attach_value(j, z, part_q);
            out << j.dump(2) << '\n';
            return kSuccess;
        }
        if (*closed) {
            const auto z = interface_closed_form(cf_n, cf_m);
            Json j = poly_document(z);
            j["n"] = cf_n;
            j["m"] = cf_m;
            attach_value(j, z, cf_q);
            out << j.dump(2) << '\n';
            return kSuccess;
        }
        if (*correlate) {
            CorrelationQuery query{corr_scheme.make(), parse_point(corr_from), parse_point(corr_to), {}};
            for (const auto& w : through)
                query.waypoints.push_back(parse_point(w));
            const Rational q0 = require_open_unit(corr_q);
            Json j;
            j["schema"] = kCorrelationSchema;
            j["scheme"] = query.scheme.name();
            j["from"] = point_to_json(query.from);
            j["to"] = point_to_json(query.to);
            j["through"] = Json::array();
            for (Point w : query.waypoints)
                j["through"].push_back(point_to_json(w));
            j["conditioned_partition"] = poly_to_json(conditioned_partition(query));
            j["partition"] = poly_to_json(partition_dp(query.scheme, query.from, query.to));
            j["q"] = rational_to_json(q0);
            j["probability"] = rational_to_json(crossing_probability(query, q0));
            out << j.dump(2) << '\n';
            return kSuccess;
        }
        if (*profile) {
            const auto inst = PinnedInstance::make(prof_K, prof_L, prof_N);
            const Rational q0 = require_open_unit(prof_q);
            const auto values = magnetization_profile(inst, q0);
            if (prof_format == "csv") {
                out << "site,numerator,denominator,decimal\n";
                for (const auto& [x, p] : values)
                    out << x << ',' << p.get_num().get_str() << ',' << p.get_den().get_str() << ','
                        << rational_to_json(p)["decimal"].dump() << '\n';
            } else {
                Json j;
                j["schema"] = kProfileSchema;
                j["K"] = inst.K;
                j["L"] = inst.L;
                j["N"] = inst.N;
                j["q"] = rational_to_json(q0);
                j["sites"] = Json::array();
                for (const auto& [x, p] : values) {
                    Json row = rational_to_json(p);
                    row["site"] = x;
                    j["sites"].push_back(row);
                }
                out << j.dump(2) << '\n';
            }
            return kSuccess;
        }
        if (*norm) {
            LaurentPoly z;
            Json j;
            if (config) {
                const auto c = parse_config(norm_L, norm_K, *config);
                z = amplitude(c);
                j = poly_document(z);
                j["config"] = c.to_string();
                j["quantity"] = "amplitude";
            } else {
                z = norm_squared(norm_L, norm_K, norm_N);
                j = poly_document(z);
                j["quantity"] = "norm_squared";
            }
            j["L"] = norm_L;
            j["K"] = norm_K;
            if (!config)
                j["N"] = norm_N;
            attach_value(j, z, norm_q);
            out << j.dump(2) << '\n';
            return kSuccess;
        }
        if (*verify) {
            bool all_hold = false;
            const Json j = run_verify(max_K, max_L, box, inject, all_hold);
            out << j.dump(2) << '\n';
            return all_hold ? kSuccess : kIdentityFailure;
        }
        if (*sample) {
            const Rational q0 = require_open_unit(samp_q);
            const auto s = samp_scheme.make();
            const Sampler sampler(s, parse_point(samp_from), parse_point(samp_to), q0, seed);
            const auto paths = sampler.sample_many(0, count, workers);
            for (const auto& p : paths)
                out << to_string(p) << '\n';
            Json j;
            j["schema"] = kSampleSchema;
            j["scheme"] = s.name();
            j["from"] = point_to_json(sampler.from());
            j["to"] = point_to_json(sampler.to());
            j["q"] = rational_to_json(q0);
            j["seed"] = seed;
            j["samples"] = count;
            out << j.dump() << '\n';
            return kSuccess;
        }
        if (*ham) {
            const Rational q0 = require_open_unit(ham_q);
            const auto h = build_hamiltonian(ham_L, ham_K, ham_N, to_double(q0));
            Json j;
            j["schema"] = kHamiltonianSchema;
            j["L"] = ham_L;
            j["K"] = ham_K;
            j["N"] = ham_N;
            j["q"] = rational_to_json(q0);
            j["dimension"] = h.basis.size();
            j["residual"] = verify_ground_state(h);
            if (h.basis.size() <= 512) {
                const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h.matrix, Eigen::EigenvaluesOnly);
                j["min_eigenvalue"] = eig.eigenvalues().minCoeff();
            }
            out << j.dump(2) << '\n';
            return kSuccess;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace zigzag::cli
