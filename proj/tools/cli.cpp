#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "vdc/certify.hpp"
#include "vdc/closed_forms.hpp"
#include "vdc/delta_lp.hpp"
#include "vdc/extremal.hpp"
#include "vdc/json_io.hpp"
#include "vdc/kernels.hpp"
#include "vdc/properties.hpp"

namespace vdc::cli {

namespace {

constexpr std::int64_t kDefaultGrid = 2048;
constexpr std::int64_t kDefaultPeriods = 1;

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = item.find_last_not_of(" \t");
        const std::string tok = item.substr(first, last - first + 1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw Error(ErrorCode::InvalidArgument, std::string("cannot parse ") + what + " entry '" + tok + "'");
        }
        out.push_back(v);
    }
    return out;
}

SupportSet parse_set(const std::string& text) {
    auto elems = parse_int_list(text, "set");
    if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "support set is empty");
    return SupportSet::finite(std::move(elems));
}

RationalCutoff parse_pq(const std::string& text) {
    const auto v = parse_int_list(text, "--pq");
    if (v.size() != 2) throw Error(ErrorCode::InvalidArgument, "--pq expects 'p,q'");
    return make_cutoff(v[0], v[1]);
}

std::string num(double v) { return format_number(v); }

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string format = "text";
    int status = kExitOk;
};

void add_format(CLI::App* sub, Context& ctx, std::vector<std::string> allowed) {
    sub->add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
}

// ---------------------------------------------------------------------------

struct TuranOpts {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

void cmd_turan(Context& ctx, const TuranOpts& o) {
    const auto h = make_cutoff(o.p, o.q);
    const double a = turan_value(h);
    std::optional<GammaSolution> gamma;
    if (h.p() == 2 || h.p() == 3) gamma = solve_gamma(h);

    if (ctx.format == "json") {
        Json j;
        j["p"] = h.p();
        j["q"] = h.q();
        j["A"] = a;
        if (gamma) j["gamma"] = to_json(*gamma);
        ctx.out << dump_json(j) << '\n';
    } else if (ctx.format == "csv") {
        ctx.out << "p,q,A,gamma0\n" << h.p() << ',' << h.q() << ',' << num(a) << ','
                << (gamma ? num(gamma->gammas[0]) : "") << '\n';
    } else {
        ctx.out << "A(" << h.p() << '/' << h.q() << ") = " << num(a) << '\n';
        if (gamma) {
            ctx.out << "r0 = " << gamma->r0 << '\n';
            for (std::size_t i = 0; i < gamma->gammas.size(); ++i) {
                ctx.out << "gamma" << i << " = " << num(gamma->gammas[i]) << '\n';
            }
            ctx.out << "1/(q gamma0) = " << num(gamma->a_value) << '\n';
        }
    }
}

// ---------------------------------------------------------------------------

struct DeltaOpts {
    std::optional<std::string> set;
    std::optional<std::string> pq;
    std::int64_t periods = kDefaultPeriods;
    std::int64_t grid = kDefaultGrid;
    bool certify = false;
};

void cmd_delta(Context& ctx, const DeltaOpts& o) {
    if (o.set.has_value() == o.pq.has_value()) {
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --set or --pq");
    }
    const SupportSet support = o.set ? parse_set(*o.set) : periodic_truncation(parse_pq(*o.pq), o.periods);
    const auto res = delta_grid_lp(support, o.grid);
    const auto poly = delta_polynomial(support, res);
    std::optional<Certificate> cert;
    if (o.certify && res.optimal()) cert = lipschitz_certify(poly, o.grid);
    if (!res.optimal()) ctx.status = kExitCheckFailed;

    if (ctx.format == "json") {
        auto j = lp_report_json(res, poly, o.grid);
        if (cert) j["certificate"] = to_json(*cert);
        ctx.out << dump_json(j) << '\n';
    } else if (ctx.format == "csv") {
        ctx.out << "set,status,value,grid,iterations" << (cert ? ",certified_min" : "") << '\n'
                << '"' << support.to_string() << "\"," << lp_status_name(res.status) << ','
                << num(res.value) << ',' << o.grid << ',' << res.iterations;
        if (cert) ctx.out << ',' << num(cert->certified_min);
        ctx.out << '\n';
    } else {
        ctx.out << "K = " << support.to_string() << '\n'
                << "status = " << lp_status_name(res.status) << '\n'
                << "delta lower bound = " << num(res.value) << '\n'
                << "grid = " << o.grid << ", iterations = " << res.iterations << '\n';
        if (cert) {
            ctx.out << "certified min of solution = " << num(cert->certified_min) << '\n';
        }
    }
}

// ---------------------------------------------------------------------------

struct ExtremalOpts {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t grid = kDefaultGrid;
    std::optional<std::string> out;
};

void cmd_extremal(Context& ctx, const ExtremalOpts& o) {
    const auto h = make_cutoff(o.p, o.q);
    const auto poly = build_extremal(h);
    const auto report = verify_membership(poly, SupportSet::block(h), o.grid);
    if (o.out) write_cospoly(*o.out, poly);
    if (!report.member()) ctx.status = kExitCheckFailed;

    if (ctx.format == "json") {
        ctx.out << dump_json(to_json(report)) << '\n';
    } else {
        ctx.out << "support_ok = " << (report.support_ok ? "true" : "false") << '\n'
                << "T(0) = " << num(report.t_at_zero) << '\n'
                << "t0 = " << num(report.t0) << '\n'
                << "certified_min = " << num(report.certified_min) << '\n'
                << "lipschitz_bound = " << num(report.lipschitz_bound) << '\n'
                << "grid = " << report.grid_size << '\n'
                << "member = " << (report.member() ? "true" : "false") << '\n';
    }
}

// ---------------------------------------------------------------------------

struct TableOpts {
    std::int64_t p = 1;
    std::int64_t qmin = 2;
    std::int64_t qmax = 30;
    bool with_lp = false;
    std::int64_t grid = kDefaultGrid;
};

void cmd_table(Context& ctx, const TableOpts& o) {
    if (o.p < 1) throw Error(ErrorCode::OutOfRange, "--p must be >= 1");
    if (o.qmin > o.qmax) throw Error(ErrorCode::InvalidArgument, "--qmin exceeds --qmax");
    struct Row {
        std::int64_t q;
        double a;
        std::optional<double> gamma0;
        std::optional<double> lp;
    };
    std::vector<Row> rows;
    for (std::int64_t q = std::max<std::int64_t>(o.qmin, 2 * o.p); q <= o.qmax; ++q) {
        if (std::gcd(o.p, q) != 1) continue;
        const auto h = make_cutoff(o.p, q);
        if (!has_turan_value(h)) continue;
        Row row{q, turan_value(h), std::nullopt, std::nullopt};
        if (h.p() <= 3) row.gamma0 = extremal_gamma(h).gammas[0];
        if (o.with_lp) row.lp = grid_delta(SupportSet::block(h), o.grid);
        rows.push_back(row);
    }
    auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };

    if (ctx.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["q"] = r.q;
            j["A"] = r.a;
            j["gamma0"] = r.gamma0 ? Json(*r.gamma0) : Json(nullptr);
            if (o.with_lp) {
                j["lp"] = *r.lp;
                j["gap"] = r.a - *r.lp;
            }
            arr.push_back(j);
        }
        Json j;
        j["p"] = o.p;
        j["grid"] = o.with_lp ? Json(o.grid) : Json(nullptr);
        j["rows"] = arr;
        ctx.out << dump_json(j) << '\n';
        return;
    }
    const char sep = ctx.format == "csv" ? ',' : '\t';
    ctx.out << 'q' << sep << 'A' << sep << "gamma0";
    if (o.with_lp) ctx.out << sep << "lp" << sep << "gap";
    ctx.out << '\n';
    for (const auto& r : rows) {
        ctx.out << r.q << sep << num(r.a) << sep << opt(r.gamma0);
        if (o.with_lp) ctx.out << sep << num(*r.lp) << sep << num(r.a - *r.lp);
        ctx.out << '\n';
    }
}

// ---------------------------------------------------------------------------

struct CheckOpts {
    std::string property;
    std::optional<std::string> k1;
    std::optional<std::string> k2;
    std::optional<std::string> set;
    std::optional<std::string> pq;
    std::int64_t factor = 2;
    std::int64_t grid = kDefaultGrid;
    std::optional<std::string> poly;
    std::optional<std::string> f;
};

const std::string& require(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
    return *v;
}

CheckReport run_pairing(const CheckOpts& o) {
    const auto h = parse_pq(require(o.pq, "--pq"));
    const auto poly = o.poly ? read_cospoly(*o.poly) : build_extremal(h);
    const auto f = o.f ? read_cospoly(*o.f) : fejer(h.q());
    const auto r = pairing_check(poly, f, h);
    CheckReport rep{"pairing",
                    {{"p", std::to_string(h.p())},
                     {"q", std::to_string(h.q())},
                     {"T", o.poly ? *o.poly : "extremal"},
                     {"f", o.f ? *o.f : "fejer"}},
                    {r.lhs, r.rhs, r.a0},
                    false};
    rep.pass = std::abs(r.lhs - r.rhs) <= 1e-9 && r.a0 <= r.lhs + 1e-9;
    return rep;
}

CheckReport run_vdc(const CheckOpts& o) {
    if (o.set.has_value() == o.pq.has_value()) {
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --set or --pq");
    }
    const SupportSet support =
        o.set ? parse_set(*o.set) : SupportSet::periodic_block(parse_pq(*o.pq));
    const auto verdict = assess_vdc(support, o.grid);
    CheckReport rep{"vdc", {{"K", support.to_string()}, {"grid", std::to_string(o.grid)}}, {}, false};
    rep.inputs.emplace_back("verdict", verdict.label());
    rep.inputs.emplace_back("source", verdict.source);
    rep.values = {verdict.bound};
    rep.pass = verdict.kind == VdcVerdict::Kind::NotVanDerCorput;
    return rep;
}

void cmd_check(Context& ctx, const CheckOpts& o) {
    CheckReport rep;
    if (o.property == "mono") {
        rep = check_monotonicity(parse_set(require(o.k1, "--k1")), parse_set(require(o.k2, "--k2")), o.grid);
    } else if (o.property == "dilate") {
        rep = check_dilation(parse_set(require(o.set, "--set")), o.factor, o.grid);
    } else if (o.property == "divis") {
        rep = check_divisibility_bound(parse_set(require(o.set, "--set")), o.factor, o.grid);
    } else if (o.property == "super") {
        rep = check_supermultiplicative(parse_set(require(o.k1, "--k1")),
                                        parse_set(require(o.k2, "--k2")), o.grid);
    } else if (o.property == "pairing") {
        rep = run_pairing(o);
    } else {
        rep = run_vdc(o);
    }
    if (!rep.pass) ctx.status = kExitCheckFailed;

    if (ctx.format == "json") {
        ctx.out << dump_json(to_json(rep)) << '\n';
        return;
    }
    ctx.out << "check = " << rep.check << '\n';
    for (const auto& [k, v] : rep.inputs) ctx.out << k << " = " << v << '\n';
    ctx.out << "values =";
    for (double v : rep.values) ctx.out << ' ' << num(v);
    ctx.out << "\npass = " << (rep.pass ? "true" : "false") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Turan extremal values, van der Corput constants and extremal polynomials", "vdc"};
    app.require_subcommand(1);
    Context ctx{out, err};
    std::function<void()> action;

    TuranOpts turan;
    auto* s_turan = app.add_subcommand("turan", "Closed-form A(p/q) and the Gamma coefficients");
    s_turan->add_option("--p", turan.p, "Numerator p")->required();
    s_turan->add_option("--q", turan.q, "Denominator q")->required();
    add_format(s_turan, ctx, {"text", "json", "csv"});
    s_turan->callback([&] { action = [&] { cmd_turan(ctx, turan); }; });

    DeltaOpts delta;
    auto* s_delta = app.add_subcommand("delta", "Grid-LP lower bound for delta(K)");
    s_delta->add_option("--set", delta.set, "Finite set 'k1,k2,...'");
    s_delta->add_option("--pq", delta.pq, "Periodic set K_{p,q} as 'p,q'");
    s_delta->add_option("--periods", delta.periods, "Periods of K_{p,q} beyond the first block")
        ->capture_default_str();
    s_delta->add_option("--grid", delta.grid, "Grid size M")->capture_default_str();
    s_delta->add_flag("--certify", delta.certify, "Certify the minimum of the solution polynomial");
    add_format(s_delta, ctx, {"text", "json", "csv"});
    s_delta->callback([&] { action = [&] { cmd_delta(ctx, delta); }; });

    ExtremalOpts extremal;
    auto* s_ext = app.add_subcommand("extremal", "Build the extremal polynomial and verify it");
    s_ext->add_option("--p", extremal.p, "Numerator p")->required();
    s_ext->add_option("--q", extremal.q, "Denominator q")->required();
    s_ext->add_option("--grid", extremal.grid, "Certificate grid size M")->capture_default_str();
    s_ext->add_option("--out", extremal.out, "Write the polynomial as CosPoly JSON");
    add_format(s_ext, ctx, {"text", "json"});
    s_ext->callback([&] { action = [&] { cmd_extremal(ctx, extremal); }; });

    TableOpts table;
    auto* s_table = app.add_subcommand("table", "Table of A(p/q) over a range of q");
    s_table->add_option("--p", table.p, "Numerator p")->capture_default_str();
    s_table->add_option("--qmin", table.qmin, "Smallest q")->capture_default_str();
    s_table->add_option("--qmax", table.qmax, "Largest q")->capture_default_str();
    s_table->add_flag("--with-lp", table.with_lp, "Add the grid-LP value for K^0_{p,q}");
    s_table->add_option("--grid", table.grid, "Grid size M")->capture_default_str();
    add_format(s_table, ctx, {"csv", "json", "text"});
    s_table->callback([&] { action = [&] { cmd_table(ctx, table); }; });

    CheckOpts check;
    auto* s_check = app.add_subcommand("check", "Run one property check");
    s_check->add_option("--property", check.property, "Property to check")
        ->required()
        ->check(CLI::IsMember({"mono", "dilate", "divis", "super", "pairing", "vdc"}));
    s_check->add_option("--k1", check.k1, "First set (mono, super)");
    s_check->add_option("--k2", check.k2, "Second set (mono, super)");
    s_check->add_option("--set", check.set, "Set (dilate, divis, vdc)");
    s_check->add_option("--pq", check.pq, "'p,q' (pairing, vdc)");
    s_check->add_option("--factor", check.factor, "Dilation factor / modulus")->capture_default_str();
    s_check->add_option("--grid", check.grid, "Grid size M")->capture_default_str();
    s_check->add_option("--poly", check.poly, "CosPoly JSON for T (pairing)");
    s_check->add_option("--f", check.f, "CosPoly JSON for f (pairing)");
    add_format(s_check, ctx, {"text", "json"});
    s_check->callback([&] { action = [&] { cmd_check(ctx, check); }; });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::SolverFailure ? kExitCheckFailed : kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return ctx.status;
}

}  // namespace vdc::cli
