#include "CLI11.hpp"
#include "json.hpp"

#include "latsum/charsum.hpp"
#include "latsum/formulas.hpp"
#include "latsum/lfunction.hpp"
#include "latsum/nondeg.hpp"
#include "latsum/parse.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace latsum;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
    int p = 0;
    int r = 1;
    std::vector<int> modulus;
    std::string vars;
    long torus_vars = 0;
    std::string poly;
    std::string lattice = "MJ";
    int m_max = 4;
    std::uint64_t budget = kDefaultBudget;
    double tolerance = 1e-3;
    bool text = false;
    int threads = 1;
};

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json mat_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json expo_json(const Expo& e) {
    json a = json::array();
    for (auto c : e) a.push_back(c);
    return a;
}

json cyclo_json(const Cyclo& c) {
    json coords = json::array();
    for (const auto& v : c.coords()) coords.push_back(rat_str(v));
    return json{{"p", c.p()}, {"zeta_coords", coords}};
}

json index_json(const IndexSplit& s, const Int& p) {
    return json{{"a", s.a}, {"e", s.e.str()}, {"value", s.value(p).str()}};
}

json poly_coeffs(const CycloPoly& p) {
    json a = json::array();
    for (const auto& c : p.c) a.push_back(cyclo_json(c));
    return a;
}

struct Context {
    Options opt;
    FieldSpec spec;
    std::vector<std::string> varnames;
    Laurent f;
    std::vector<Expo> J;
    std::size_t n = 0;
};

Context make_context(const Options& opt) {
    Context ctx;
    ctx.opt = opt;
    if (opt.p < 2 || !is_prime(Int(opt.p)))
        throw std::invalid_argument("--p must be a prime");
    if (opt.modulus.empty())
        ctx.spec = FieldSpec::make(opt.p, opt.r);
    else
        ctx.spec = FieldSpec{opt.p, opt.r, opt.modulus};
    Fq field = ctx.spec.make_field();  // validates the modulus
    if (field.deg() != opt.r)
        throw std::invalid_argument("--modulus degree must match --r");

    ctx.varnames = split_names(opt.vars);
    if (ctx.varnames.empty())
        throw std::invalid_argument("--vars must name at least one variable");
    if (opt.torus_vars < 0 ||
        static_cast<std::size_t>(opt.torus_vars) > ctx.varnames.size())
        throw std::invalid_argument("--torus-vars out of range");
    ctx.f = parse_poly(opt.poly, ctx.varnames, field,
                       static_cast<std::size_t>(opt.torus_vars));
    if (ctx.f.is_zero()) throw std::invalid_argument("polynomial is zero");
    ctx.J = ctx.f.support();
    ctx.n = ctx.varnames.size();
    return ctx;
}

IntegerLattice chosen_lattice(const Context& ctx) {
    const std::string& which = ctx.opt.lattice;
    if (which == "MJ")
        return prime_to_p_saturation(ctx.J, ctx.n, ctx.opt.p).m_j;
    if (which == "ZJ") return span_lattice(ctx.J, ctx.n).span;
    if (which == "ambient") return span_lattice(ctx.J, ctx.n).ambient;
    std::ifstream in(which);
    if (!in) throw std::invalid_argument("cannot open basis file: " + which);
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ls(line);
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw std::invalid_argument("empty basis file");
    IntMat gen(rows.size(), ctx.n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ctx.n)
            throw std::invalid_argument("basis row width mismatch");
        for (std::size_t j = 0; j < ctx.n; ++j) gen(i, j) = rows[i][j];
    }
    return IntegerLattice(ctx.n, gen);
}

json inputs_echo(const Context& ctx) {
    return json{{"poly", ctx.opt.poly},
                {"vars", ctx.opt.vars},
                {"torus_vars", ctx.opt.torus_vars},
                {"p", ctx.opt.p},
                {"r", ctx.opt.r},
                {"modulus", ctx.spec.modulus},
                {"lattice", ctx.opt.lattice},
                {"m_max", ctx.opt.m_max},
                {"budget", ctx.opt.budget},
                {"tolerance", ctx.opt.tolerance},
                {"threads", ctx.opt.threads}};
}

json run_lattice(const Context& ctx) {
    auto sp = span_lattice(ctx.J, ctx.n);
    auto sat = prime_to_p_saturation(ctx.J, ctx.n, ctx.opt.p);
    Int p(ctx.opt.p);
    return json{
        {"span_basis", mat_json(sp.span.basis())},
        {"ambient_basis", mat_json(sp.ambient.basis())},
        {"mj_basis", mat_json(sat.m_j.basis())},
        {"rank", sp.span.rank()},
        {"full_index", index_json(sat.full_index, p)},
        {"mj_index", index_json(lattice_index(sat.m_j, sp.ambient, p), p)}};
}

json run_reduce(const Context& ctx) {
    auto red = p_power_reduce(ctx.J, ctx.n, ctx.opt.p);
    json d = json::array(), b = json::array(), e = json::array();
    for (const auto& v : red.d) d.push_back(v.str());
    for (auto v : red.b) b.push_back(v);
    for (const auto& v : red.e) e.push_back(v.str());
    json terms = json::array();
    for (const auto& [c, src] : red.g_terms)
        terms.push_back(json{{"exponent", expo_json(c)},
                             {"reduced", expo_json(reduced_exponent(red, c))},
                             {"source", src},
                             {"original", expo_json(ctx.J[src])}});
    return json{{"unimodular_change", mat_json(red.unimodular_change)},
                {"d", d},
                {"p_power_exponents", b},
                {"prime_to_p_parts", e},
                {"terms", terms}};
}

json run_polytope(const Context& ctx) {
    NewtonPolytope poly(ctx.J, ctx.n);
    IntegerLattice lat = chosen_lattice(ctx);
    json vertices = json::array();
    for (const auto& v : poly.vertices()) vertices.push_back(expo_json(v));
    json facets = json::array();
    for (const auto& f : poly.facets()) {
        json normal = json::array();
        for (const auto& a : f.normal) normal.push_back(a.str());
        facets.push_back(json{{"normal", normal}, {"offset", f.offset.str()}});
    }
    json out{{"dim", poly.dim()},
             {"vertices", vertices},
             {"facets_in_span_coords", facets},
             {"faces", poly.faces().size()},
             {"faces_excluding_origin", poly.faces_excluding_origin().size()}};
    if (poly.dim() > 0) {
        out["weight_denominator"] = poly.weight_denominator().str();
        out["lattice_points_dilation_1"] = poly.lattice_points(1).size();
        out["normalized_volume"] = normalized_volume(poly, lat).str();
        auto h = hilbert_numerator(poly, lat);
        json a = json::array();
        for (const auto& c : h.a) a.push_back(c.str());
        out["hilbert"] = json{{"k", h.k}, {"n_denom", h.n_denom.str()}, {"a", a}};
    }
    return out;
}

json run_invariants(const Context& ctx) {
    Int p(ctx.opt.p);
    SupportInput in{ctx.J, ctx.n, static_cast<std::size_t>(ctx.opt.torus_vars)};
    json out;
    out["convenient"] = convenient(in);
    out["torus_degree_bound"] = torus_degree_bound(in, p).str();
    out["nu"] = nu(in, p).str();
    out["top_weight_count"] = top_weight_count(in, p).str();

    NewtonPolytope poly(ctx.J, ctx.n);
    IntegerLattice lat = chosen_lattice(ctx);
    long cap = 4 * static_cast<long>(ctx.n + 1);
    if (poly.dim() > 0) {
        try {
            out["mu"] = mu_dilation(poly, lat, cap);
            out["omega"] = rat_str(omega_dilation(poly, lat, cap));
        } catch (const DilationSearchError& e) {
            out["dilation_error"] = e.what();
        }
    }
    bool laurent = false;
    for (const auto& e : ctx.J)
        for (auto c : e)
            if (c < 0) laurent = true;
    if (!laurent) {
        auto b = cw_divisibility({ctx.J}, ctx.n, p);
        if (b.mu_minus_one) out["mu_minus_one"] = rat_str(*b.mu_minus_one);
        out["omega_minus_s"] = rat_str(b.omega_minus_s);
    }
    return out;
}

json witness_json(const NondegWitness& w) {
    json pt = json::array();
    for (const auto& c : w.point) pt.push_back(c);
    return json{{"extension_degree", w.m},
                {"point_coords", pt},
                {"face_index", w.face_index}};
}

json verdict_json(const NondegVerdict& v) {
    json out{{"status", v.status == NondegStatus::Degenerate
                            ? "degenerate"
                            : "nondegenerate_up_to_degree"},
             {"searched_bound", v.searched_bound}};
    if (v.witness) out["witness"] = witness_json(*v.witness);
    return out;
}

json run_nondeg(const Context& ctx, int& exit_code) {
    IntegerLattice lat = chosen_lattice(ctx);
    auto direct = is_nondegenerate(ctx.f, ctx.spec, lat, ctx.opt.m_max,
                                   ctx.opt.budget);
    auto reduced = nondeg_via_reduction(ctx.f, ctx.spec, lat, ctx.opt.m_max,
                                        ctx.opt.budget);
    bool agree = direct.status == reduced.status;
    if (!agree) exit_code = kExitMismatch;
    return json{{"direct", verdict_json(direct)},
                {"via_reduction", verdict_json(reduced)},
                {"paths_agree", agree}};
}

std::vector<Cyclo> measure_sums(const Context& ctx) {
    std::vector<Cyclo> sums;
    for (int m = 1; m <= ctx.opt.m_max; ++m)
        sums.push_back(sum_mixed(ctx.f, ctx.spec,
                                 static_cast<std::size_t>(ctx.opt.torus_vars), m,
                                 ctx.opt.budget));
    return sums;
}

json run_sums(const Context& ctx) {
    auto sums = measure_sums(ctx);
    json table = json::array();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        json row{{"m", i + 1}, {"value", cyclo_json(sums[i])}};
        auto v = ord_q(sums[i], ctx.opt.r);
        row["ord_q"] = v ? json(rat_str(*v)) : json(nullptr);
        table.push_back(row);
    }
    return json{{"sums", table}};
}

long reconstruction_bound(const Context& ctx) {
    Int p(ctx.opt.p);
    SupportInput in{ctx.J, ctx.n, static_cast<std::size_t>(ctx.opt.torus_vars)};
    Int b = (in.torus_vars == ctx.n) ? torus_degree_bound(in, p) : nu(in, p);
    long v = b.convert_to<long>();
    return v > 0 ? v : 1;
}

json run_lfunc(const Context& ctx, int& exit_code) {
    auto sums = measure_sums(ctx);
    auto series = l_series(ctx.opt.p, sums);
    long bound = reconstruction_bound(ctx);
    json out{{"degree_bound", bound}};
    std::optional<RationalFn> fn;
    try {
        fn = rational_reconstruct(ctx.opt.p, series, bound, bound);
    } catch (const NoRationalFit&) {
        out["reconstructed"] = false;
        exit_code = kExitMismatch;
        return out;
    }
    out["reconstructed"] = true;
    out["numerator"] = poly_coeffs(fn->num);
    out["denominator"] = poly_coeffs(fn->den);
    Rat q = Rat(pow_int(Int(ctx.opt.p), ctx.opt.r));
    for (auto [name, part] :
         {std::pair<const char*, const CycloPoly*>{"numerator_weights", &fn->num},
          {"denominator_weights", &fn->den}}) {
        if (part->degree() == 0) continue;
        json polygon = json::array();
        for (const auto& [x, y] : newton_polygon_ordq(*part, ctx.opt.r).points)
            polygon.push_back(json{{"x", x}, {"y", rat_str(y)}});
        out[std::string(name) + "_polygon"] = polygon;
        try {
            auto hist = root_moduli(*part, q, ctx.opt.tolerance);
            json counts;
            for (const auto& [w, c] : hist.counts)
                counts[std::to_string(w)] = c;
            out[name] = json{{"counts", counts},
                             {"max_residual", hist.max_residual}};
        } catch (const std::runtime_error& e) {
            out[name] = json{{"error", e.what()}};
        }
    }
    return out;
}

json run_verify(const Context& ctx, int& exit_code) {
    Int p(ctx.opt.p);
    json checks = json::array();
    auto record = [&](const std::string& name, bool pass, json detail) {
        checks.push_back(
            json{{"check", name}, {"pass", pass}, {"detail", detail}});
        if (!pass) exit_code = kExitMismatch;
    };

    IntegerLattice lat = chosen_lattice(ctx);
    auto direct = is_nondegenerate(ctx.f, ctx.spec, lat, ctx.opt.m_max,
                                   ctx.opt.budget);
    auto reduced = nondeg_via_reduction(ctx.f, ctx.spec, lat, ctx.opt.m_max,
                                        ctx.opt.budget);
    record("nondegeneracy paths agree", direct.status == reduced.status,
           json{{"direct", verdict_json(direct)},
                {"via_reduction", verdict_json(reduced)}});

    auto sums = measure_sums(ctx);
    long bound = reconstruction_bound(ctx);
    bool fits = true;
    json fit_detail{{"degree_bound", bound}};
    try {
        auto fn = rational_reconstruct(ctx.opt.p, l_series(ctx.opt.p, sums),
                                       bound, bound);
        fit_detail["numerator_degree"] = fn.num.degree();
        fit_detail["denominator_degree"] = fn.den.degree();
        fits = fn.num.degree() + fn.den.degree() <= bound;
    } catch (const NoRationalFit&) {
        fits = false;
        fit_detail["reconstructed"] = false;
    }
    record("L-function within predicted degree", fits, fit_detail);

    bool laurent = false;
    for (const auto& e : ctx.J)
        for (auto c : e)
            if (c < 0) laurent = true;
    if (!laurent && ctx.opt.torus_vars == 0) {
        // divisibility of the affine zero count
        auto b = cw_divisibility({ctx.J}, ctx.n, p);
        Int zeros = count_zeros({ctx.f}, ctx.spec, 1, ctx.opt.budget);
        bool ok = true;
        json detail{{"zero_count", zeros.str()}};
        if (b.mu_minus_one) {
            detail["mu_minus_one"] = rat_str(*b.mu_minus_one);
            if (zeros != 0) {
                Rat ordn = Rat(vp(zeros, p), ctx.opt.r);
                detail["ord_q_count"] = rat_str(ordn);
                ok = ordn >= *b.mu_minus_one;
            }
        }
        record("zero count divisibility", ok, detail);

        // valuation of the first affine sum against the weight dilation
        NewtonPolytope poly(ctx.J, ctx.n);
        if (poly.dim() > 0) {
            IntegerLattice mj = prime_to_p_saturation(ctx.J, ctx.n, p).m_j;
            try {
                Rat omega = omega_dilation(poly, mj, 4 * (long)(ctx.n + 1));
                auto v = ord_q(sums[0], ctx.opt.r);
                bool divis = !v || *v >= omega;
                record("first sum valuation at least omega", divis,
                       json{{"omega", rat_str(omega)},
                            {"ord_q_S1", v ? json(rat_str(*v)) : json(nullptr)}});
            } catch (const DilationSearchError&) {
            }
        }
    }
    return json{{"checks", checks}};
}

void print_report(const json& report, bool text) {
    if (!text) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << report["command"].get<std::string>() << " report\n";
    std::cout << report["results"].dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for lattice-relative exponential sums"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> commands = {
        "lattice", "reduce", "polytope", "invariants",
        "nondeg",  "sums",   "lfunc",    "verify"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("poly", opt.poly, "polynomial text")->required();
        sub->add_option("--vars", opt.vars, "comma-separated variable names")
            ->required();
        sub->add_option("--torus-vars", opt.torus_vars,
                        "this many leading variables range over the torus");
        sub->add_option("--p", opt.p, "characteristic")->required();
        sub->add_option("--r", opt.r, "base field degree over the prime field");
        sub->add_option("--modulus", opt.modulus,
                        "base field modulus coefficients, low to high");
        sub->add_option("--lattice", opt.lattice,
                        "MJ, ZJ, ambient, or a basis file");
        sub->add_option("--m-max", opt.m_max, "extensions to visit");
        sub->add_option("--budget", opt.budget, "evaluation budget");
        sub->add_option("--tolerance", opt.tolerance,
                        "relative tolerance for weight classification");
        sub->add_option("--threads", opt.threads, "worker threads");
        sub->add_flag("--text", opt.text, "human-readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto t0 = std::chrono::steady_clock::now();
    int exit_code = kExitPass;
    json report;
    try {
        Context ctx = make_context(opt);
        json results;
        if (command == "lattice") results = run_lattice(ctx);
        else if (command == "reduce") results = run_reduce(ctx);
        else if (command == "polytope") results = run_polytope(ctx);
        else if (command == "invariants") results = run_invariants(ctx);
        else if (command == "nondeg") results = run_nondeg(ctx, exit_code);
        else if (command == "sums") results = run_sums(ctx);
        else if (command == "lfunc") results = run_lfunc(ctx, exit_code);
        else results = run_verify(ctx, exit_code);

        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        report = json{{"command", command},
                      {"inputs", inputs_echo(ctx)},
                      {"results", results},
                      {"versions", json{{"artifact", "1.0.0"}}},
                      {"timings", json{{"total_ms", ms}}}};
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    print_report(report, opt.text);
    return exit_code;
}
