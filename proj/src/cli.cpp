#include "k3mirror/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>

#include "k3mirror/acceptance.hpp"
#include "k3mirror/json_io.hpp"
#include "k3mirror/sampling.hpp"

namespace k3mirror::cli {

namespace {

using json_io::json;
using json_io::to_json;

// A flag whose value could not be decoded.
struct UsageError {
    std::string flag;
    std::string message;
};

template <class F>
auto decode(std::string const& flag, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (Error const& e) {
        if (e.kind() != ErrorKind::InvalidArgument)
            throw;
        throw UsageError{flag, e.what()};
    } catch (json::exception const& e) {
        throw UsageError{flag, e.what()};
    }
}

json signature_json(Signature const& s)
{
    json a = json::array({s.positive, s.negative});
    return a;
}

struct SplitFlags {
    std::string split;
    std::string lattice;
    std::string e;
    std::string eprime;
    long m = 1;

    void add_to(CLI::App* app)
    {
        auto* whole = app->add_option("--split", split, "split JSON {\"lattice\", \"e\", \"eprime\", \"m\"} or file");
        app->add_option("--lattice", lattice, "transcendental lattice T (sublattice JSON, lattice JSON or catalog name)")
            ->excludes(whole);
        app->add_option("--e", e, "isotropic vector E in ambient coordinates")->excludes(whole);
        app->add_option("--eprime", eprime, "partner E' in ambient coordinates")->excludes(whole);
        app->add_option("--m", m, "pairing E.E'")->default_val(1)->excludes(whole);
    }

    MirrorSplit build() const
    {
        if (!split.empty())
            return decode("--split", [&] { return json_io::split_from(json_io::load(split)); });
        for (auto const& [flag, value] : {std::pair{"--lattice", &lattice}, {"--e", &e}, {"--eprime", &eprime}})
            if (value->empty())
                throw UsageError{flag, std::string(flag) + " is required (or pass --split)"};
        Sublattice const t = decode("--lattice", [&] { return json_io::sublattice_from(json_io::load(lattice)); });
        LatticeVector const ev = decode("--e", [&] { return json_io::parse_lattice_vector(e); });
        LatticeVector const epv = decode("--eprime", [&] { return json_io::parse_lattice_vector(eprime); });
        return construct_mirror(check_admissible(t, ev, epv, m));
    }
};

Rational rational_flag(std::string const& flag, std::string const& text)
{
    return decode(flag, [&] { return parse_rational(text); });
}

json period_json_flag(std::string const& flag, std::string const& text, Sublattice const& lattice)
{
    return decode(flag, [&] { return to_json(json_io::period_from(json_io::load(text), lattice)); });
}

FormPair form_pair_flag(std::string const& text)
{
    return decode("--period", [&] {
        json const j = json_io::load(text);
        json const& p = j.is_object() && j.contains("period") ? j.at("period") : j;
        if (!p.is_object() || !p.contains("re") || !p.contains("im"))
            throw Error(ErrorKind::InvalidArgument, "expected {\"re\": [...], \"im\": [...]}");
        return FormPair{json_io::rational_vector_from(p.at("re")), json_io::rational_vector_from(p.at("im"))};
    });
}

std::optional<FixedLocusCase> parse_case(std::string const& name)
{
    if (name == "generic")
        return FixedLocusCase::Generic;
    if (name == "empty")
        return FixedLocusCase::Empty;
    if (name == "two_elliptic")
        return FixedLocusCase::TwoElliptic;
    return std::nullopt;
}

std::string case_name(FixedLocusCase c)
{
    switch (c) {
    case FixedLocusCase::Empty: return "empty";
    case FixedLocusCase::TwoElliptic: return "two_elliptic";
    default: return "generic";
    }
}

json bv_json(BVData const& d)
{
    if (d.is_self_mirror_case())
        return json{{"case", case_name(d.fixed_case)}};
    return json{{"case", "generic"}, {"n", d.n}, {"nprime", d.n_prime}};
}

// E2 page with q increasing upwards, one "dim label" cell per (p, q).
void print_grid(std::ostream& out, json const& entries)
{
    int max_p = 0, max_q = 0;
    std::map<std::pair<int, int>, std::string> cells;
    for (auto const& e : entries) {
        int const p = e.at("p").get<int>(), q = e.at("q").get<int>();
        max_p = std::max(max_p, p);
        max_q = std::max(max_q, q);
        cells[{p, q}] = std::to_string(e.at("dim").get<long>()) + " " + e.at("label").get<std::string>();
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(max_p) + 1, 1);
    auto shown = [](std::string const& s) {
        // Count code points, not bytes, and skip combining accents (U+0300..U+036F).
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
            auto const u = static_cast<unsigned char>(c);
            return (u & 0xC0) != 0x80 && u != 0xCC && u != 0xCD;
        }));
    };
    for (auto const& [pq, text] : cells)
        width[static_cast<std::size_t>(pq.first)] = std::max(width[static_cast<std::size_t>(pq.first)], shown(text));
    for (int q = max_q; q >= 0; --q) {
        out << "q=" << q << " |";
        for (int p = 0; p <= max_p; ++p) {
            auto it = cells.find({p, q});
            std::string const text = it == cells.end() ? "0" : it->second;
            out << ' ' << text << std::string(width[static_cast<std::size_t>(p)] - shown(text), ' ') << " |";
        }
        out << '\n';
    }
    out << "     ";
    for (int p = 0; p <= max_p; ++p) {
        std::string const label = "p=" + std::to_string(p);
        out << "  " << label << std::string(width[static_cast<std::size_t>(p)] > label.size() ? width[static_cast<std::size_t>(p)] - label.size() : 0, ' ');
    }
    out << '\n';
}

void print_table(std::ostream& out, json j)
{
    if (!j.is_object()) {
        out << j.dump() << '\n';
        return;
    }
    if (j.contains("entries") && j.at("entries").is_array()) {
        print_grid(out, j.at("entries"));
        j.erase("entries");
    }
    std::size_t width = 0;
    for (auto const& [k, v] : j.items())
        width = std::max(width, k.size());
    for (auto const& [k, v] : j.items())
        out << std::left << std::setw(static_cast<int>(width)) << k << "  "
            << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

void print_verify_table(std::ostream& out, std::vector<CriterionResult> const& rs)
{
    for (auto const& r : rs)
        out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(36)
            << r.name << std::right << std::fixed << std::setprecision(3) << std::setw(8) << r.seconds << " s  "
            << r.detail << '\n';
    long const passed = std::count_if(rs.begin(), rs.end(), [](auto const& r) { return r.passed; });
    out << passed << "/" << rs.size() << " criteria passed\n";
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact lattice and cohomology computations for K3 and Borcea-Voisin mirror symmetry", "k3mirror"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output = "json";
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->default_val("json");

    // Each leaf command fills `result`; `verify` sets its own report.
    std::vector<std::pair<CLI::App*, std::function<json()>>> leaves;
    std::vector<CriterionResult> verify_results;
    bool verify_ran = false;
    auto leaf = [&](CLI::App* parent, std::string const& name, std::string const& help) {
        CLI::App* sub = parent->add_subcommand(name, help);
        return sub;
    };
    auto group = [&](std::string const& name, std::string const& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };

    // lattice
    CLI::App* lattice = group("lattice", "integer lattices");
    std::string spec_text, sub_text, matrix_text, vector_text;
    {
        CLI::App* c = leaf(lattice, "info", "rank, determinant, signature and parity");
        c->add_option("--spec", spec_text, "catalog name (K3, E8-, U:m), Gram JSON or file")->required();
        leaves.emplace_back(c, [&] {
            IntegerLattice const l = decode("--spec", [&] { return json_io::lattice_from(json_io::load(spec_text)); });
            DetSignature const ds = det_and_signature(l);
            json j{{"rank", l.rank()}, {"det", to_json(ds.det)}, {"even", l.is_even()},
                   {"signature", signature_json(ds.signature)}};
            if (ds.signature.zero != 0)
                j["nullity"] = ds.signature.zero;
            return j;
        });
    }
    {
        CLI::App* c = leaf(lattice, "complement", "orthogonal complement of a sublattice");
        c->add_option("--sub", sub_text, "sublattice JSON or file")->required();
        leaves.emplace_back(c, [&] {
            Sublattice const s = decode("--sub", [&] { return json_io::sublattice_from(json_io::load(sub_text)); });
            Sublattice const c2 = orthogonal_complement(s);
            return json{{"rank", c2.rank()}, {"basis", to_json(c2.basis())}, {"gram", to_json(c2.induced_gram())}};
        });
    }
    {
        CLI::App* c = leaf(lattice, "snf", "Smith normal form left * A * right = diag");
        c->add_option("--matrix", matrix_text, "integer matrix JSON or file")->required();
        leaves.emplace_back(c, [&] {
            IntMatrix const a = decode("--matrix", [&] { return json_io::int_matrix_from(json_io::load(matrix_text)); });
            SmithDecomposition const d = smith_normal_form(a);
            json diag = json::array();
            for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
                diag.push_back(to_json(d.diag(i, i)));
            return json{{"diag", diag}, {"left", to_json(d.left)}, {"right", to_json(d.right)}, {"rank", d.rank()}};
        });
    }
    {
        CLI::App* c = leaf(lattice, "vector", "norm, divisibility and primitivity of a vector");
        c->add_option("--sub", sub_text, "sublattice JSON, lattice JSON or catalog name")->required();
        c->add_option("--v", vector_text, "vector in ambient coordinates")->required();
        leaves.emplace_back(c, [&] {
            Sublattice const s = decode("--sub", [&] { return json_io::sublattice_from(json_io::load(sub_text)); });
            LatticeVector const v = decode("--v", [&] { return json_io::parse_lattice_vector(vector_text); });
            if (v.size() != s.ambient().rank())
                throw Error(ErrorKind::DimensionMismatch, "vector length differs from the ambient rank");
            Integer const div = divisibility(s, v);
            return json{{"norm", to_json(pairing(s.ambient(), v, v))},
                        {"divisibility", to_json(div)},
                        {"primitive", is_primitive(s, v)}};
        });
    }

    // mirror
    CLI::App* mirror = group("mirror", "mirror lattices and mirror maps");
    SplitFlags split_flags;
    std::string height_lattice, b_text, omega_text, period_text;
    long height = 1;
    {
        CLI::App* c = leaf(mirror, "isotropic", "primitive isotropic vectors up to a coefficient height");
        c->add_option("--lattice", height_lattice, "sublattice JSON, lattice JSON or catalog name")->required();
        c->add_option("--height", height, "coefficient bound in the lattice basis")->required();
        leaves.emplace_back(c, [&] {
            Sublattice const t = decode("--lattice", [&] { return json_io::sublattice_from(json_io::load(height_lattice)); });
            json vs = json::array();
            for (auto const& v : find_isotropic(t, height))
                vs.push_back(to_json(v));
            return json{{"count", vs.size()}, {"vectors", vs}};
        });
    }
    {
        CLI::App* c = leaf(mirror, "construct", "mirror lattice from an admissible pair");
        split_flags.add_to(c);
        leaves.emplace_back(c, [&] { return to_json(split_flags.build()); });
    }
    {
        CLI::App* c = leaf(mirror, "phi", "mirror map from the tube domain over the mirror lattice");
        split_flags.add_to(c);
        c->add_option("--b", b_text, "B-field in ambient coordinates")->required();
        c->add_option("--omega", omega_text, "Kähler class in ambient coordinates")->required();
        leaves.emplace_back(c, [&] {
            MirrorSplit const s = split_flags.build();
            RationalVector const b = decode("--b", [&] { return json_io::parse_rational_vector(b_text); });
            RationalVector const w = decode("--omega", [&] { return json_io::parse_rational_vector(omega_text); });
            if (b.size() != s.mirror.ambient().rank() || w.size() != s.mirror.ambient().rank())
                throw Error(ErrorKind::DimensionMismatch, "--b and --omega need ambient length " +
                                                              std::to_string(s.mirror.ambient().rank()));
            TubePoint const p{s.mirror, b, w};
            PeriodVector const omega = phi(s, p);
            json j = to_json(omega);
            j["self_pairing"] = to_json(self_pairing(omega));
            j["hermitian_norm"] = to_json(hermitian_norm(omega));
            j["twice_kahler_norm"] = to_json(Rational(2 * pairing(s.mirror.ambient(), w, w)));
            return j;
        });
    }
    {
        CLI::App* c = leaf(mirror, "phi-inverse", "inverse mirror map on the period domain");
        split_flags.add_to(c);
        c->add_option("--period", period_text, "period JSON {\"re\": [...], \"im\": [...]} or file")->required();
        leaves.emplace_back(c, [&] {
            MirrorSplit const s = split_flags.build();
            PeriodVector const p = decode("--period", [&] {
                return json_io::period_from(json_io::load(period_text), s.pair.transcendental);
            });
            return to_json(phi_inverse(s, p));
        });
    }
    {
        CLI::App* c = leaf(mirror, "elliptic", "elliptic curve mirror map");
        c->add_option("--b", b_text, "B-field")->required();
        c->add_option("--omega", omega_text, "Kähler parameter")->required();
        leaves.emplace_back(c, [&] {
            EllipticPeriod const e = elliptic_phi(rational_flag("--b", b_text), rational_flag("--omega", omega_text));
            return json{{"sx", to_json(e.sx_coeff)}, {"tau", to_json(e.tau)}};
        });
    }

    // period
    CLI::App* period = group("period", "period domain membership");
    std::string period_lattice;
    {
        CLI::App* c = leaf(period, "check", "Ω.Ω, Ω.Ω̄ and the divisor condition");
        c->add_option("--lattice", period_lattice, "sublattice JSON, lattice JSON or catalog name")->required();
        c->add_option("--period", period_text, "period JSON or file")->required();
        leaves.emplace_back(c, [&] {
            Sublattice const t = decode("--lattice", [&] { return json_io::sublattice_from(json_io::load(period_lattice)); });
            PeriodVector const p = decode("--period", [&] { return json_io::period_from(json_io::load(period_text), t); });
            DeltaResult const d = in_delta(p);
            return json{{"self_pairing", to_json(self_pairing(p))},
                        {"hermitian_norm", to_json(hermitian_norm(p))},
                        {"in_period_domain", in_period_domain(p)},
                        {"in_delta", d.in_delta},
                        {"witness", d.witness ? to_json(*d.witness) : json(nullptr)}};
        });
    }

    // hk
    CLI::App* hk = group("hk", "hyperkähler rotation");
    std::string hk_lattice, kahler_text, re_text, im_text, slope_text, c_text, s_text;
    {
        CLI::App* c = leaf(hk, "table", "complex structures I, J, K from a normalized (Ω, ω)");
        c->add_option("--lattice", hk_lattice, "lattice JSON or catalog name")->required();
        auto* whole = c->add_option("--period", period_text, "holomorphic form {\"re\", \"im\"}");
        auto* re = c->add_option("--omega-re", re_text, "real part of Ω")->excludes(whole);
        auto* im = c->add_option("--omega-im", im_text, "imaginary part of Ω")->excludes(whole);
        re->needs(im);
        im->needs(re);
        c->add_option("--kahler", kahler_text, "Kähler class")->required();
        leaves.emplace_back(c, [&] {
            IntegerLattice const l = decode("--lattice", [&] { return json_io::lattice_from(json_io::load(hk_lattice)); });
            if (period_text.empty() && re_text.empty())
                throw UsageError{"--period", "pass --period or --omega-re/--omega-im"};
            FormPair const f = period_text.empty()
                                   ? FormPair{decode("--omega-re", [&] { return json_io::parse_rational_vector(re_text); }),
                                              decode("--omega-im", [&] { return json_io::parse_rational_vector(im_text); })}
                                   : form_pair_flag(period_text);
            RationalVector const w = decode("--kahler", [&] { return json_io::parse_rational_vector(kahler_text); });
            for (auto const* v : {&f.re, &f.im, &w})
                if (v->size() != l.rank())
                    throw Error(ErrorKind::DimensionMismatch, "vectors need length " + std::to_string(l.rank()));
            return to_json(rotation_table(f, w, l));
        });
    }
    {
        CLI::App* c = leaf(hk, "rotate", "multiply Ω by a rational unit phase");
        c->add_option("--period", period_text, "holomorphic form {\"re\", \"im\"}")->required();
        auto* slope = c->add_option("--slope", slope_text, "phase (1-t²+2it)/(1+t²)");
        auto* cos = c->add_option("--c", c_text, "real part of the phase");
        auto* sin = c->add_option("--s", s_text, "imaginary part of the phase");
        slope->excludes(cos)->excludes(sin);
        cos->needs(sin);
        sin->needs(cos);
        leaves.emplace_back(c, [&, slope] {
            FormPair const f = form_pair_flag(period_text);
            if (f.re.size() != f.im.size())
                throw Error(ErrorKind::DimensionMismatch, "re and im have different lengths");
            UnitPhase const th = slope->count() > 0 ? UnitPhase::from_slope(rational_flag("--slope", slope_text))
                               : !c_text.empty()    ? UnitPhase(rational_flag("--c", c_text), rational_flag("--s", s_text))
                                                    : UnitPhase(1, 0);
            FormPair const r = phase_rotate(f, th);
            return json{{"re", to_json(r.re)}, {"im", to_json(r.im)}};
        });
    }

    // involution
    CLI::App* inv = group("involution", "lattice involutions");
    std::string inv_text, fiber_type;
    SplitFlags inv_split;
    {
        CLI::App* c = leaf(inv, "split", "invariant and anti-invariant sublattices");
        c->add_option("--involution", inv_text, "involution JSON or file")->required();
        leaves.emplace_back(c, [&] {
            LatticeInvolution const rho = decode("--involution", [&] { return json_io::involution_from(json_io::load(inv_text)); });
            InvariantSplit const s = invariant_sublattices(rho);
            return json{{"plus", to_json(s.plus.basis())}, {"minus", to_json(s.minus.basis())},
                        {"plus_rank", s.plus.rank()}, {"minus_rank", s.minus.rank()}};
        });
    }
    {
        CLI::App* c = leaf(inv, "mirror", "mirror involution r_P composed with ρ");
        c->add_option("--involution", inv_text, "involution JSON or file")->required();
        c->add_option("--e", inv_split.e, "isotropic vector E")->required();
        c->add_option("--eprime", inv_split.eprime, "partner E'")->required();
        c->add_option("--m", inv_split.m, "pairing E.E'")->default_val(1);
        leaves.emplace_back(c, [&] {
            LatticeInvolution const rho = decode("--involution", [&] { return json_io::involution_from(json_io::load(inv_text)); });
            InvariantSplit const eig = invariant_sublattices(rho);
            LatticeVector const ev = decode("--e", [&] { return json_io::parse_lattice_vector(inv_split.e); });
            LatticeVector const epv = decode("--eprime", [&] { return json_io::parse_lattice_vector(inv_split.eprime); });
            MirrorSplit const s = construct_mirror(check_admissible(eig.minus, ev, epv, inv_split.m));
            LatticeInvolution const dual = mirror_involution(rho, s);
            InvariantSplit const d = invariant_sublattices(dual);
            return json{{"matrix", to_json(dual.matrix())},
                        {"plus", to_json(d.plus.basis())},
                        {"minus", to_json(d.minus.basis())}};
        });
    }
    {
        CLI::App* c = leaf(inv, "dual-fiber", "real locus of a singular fibre after composing with fibrewise negation");
        c->add_option("--type", fiber_type, "figure_eight, circle_point, singular_circle, ...")->required();
        leaves.emplace_back(c, [&] {
            auto const t = parse_real_fiber_type(fiber_type);
            if (!t)
                throw UsageError{"--type", "unknown real fibre type '" + fiber_type + "'"};
            return json{{"type", std::string(to_string(*t))}, {"dual", std::string(to_string(real_fiber_dual(*t)))}};
        });
    }

    // bv
    CLI::App* bv = group("bv", "Borcea-Voisin threefolds");
    long bv_n = 0, bv_np = 0;
    std::string bv_case = "generic";
    auto bv_data = [&](CLI::App* c) -> std::function<BVData()> {
        auto* n = c->add_option("--n", bv_n, "number of fixed curves N");
        auto* np = c->add_option("--nprime", bv_np, "genus N' of the non-rational fixed curve");
        auto* cs = c->add_option("--case", bv_case, "generic, empty or two_elliptic")
                       ->check(CLI::IsMember({"generic", "empty", "two_elliptic"}));
        n->needs(np);
        np->needs(n);
        return [&, n, cs] {
            FixedLocusCase const fc = *parse_case(bv_case);
            if (fc != FixedLocusCase::Generic) {
                if (n->count() > 0)
                    throw UsageError{"--n", "--n/--nprime cannot be combined with --case " + bv_case};
                return BVData::self_mirror(fc);
            }
            if (n->count() == 0)
                throw UsageError{"--n", "--n and --nprime are required for the generic case"};
            (void)cs;
            return BVData::generic(bv_n, bv_np);
        };
    };
    {
        CLI::App* c = leaf(bv, "hodge", "h11, h21 and Euler number");
        auto data = bv_data(c);
        leaves.emplace_back(c, [data] {
            BVData const d = data();
            HodgePair const h = hodge_numbers(d);
            return json{{"h11", h.h11}, {"h21", h.h21}, {"euler", euler_characteristic(d)}};
        });
    }
    {
        CLI::App* c = leaf(bv, "swap", "mirror (N, N') data");
        auto data = bv_data(c);
        leaves.emplace_back(c, [data] { return bv_json(mirror_swap(data())); });
    }

    // census
    CLI::App* census = group("census", "singular fibre censuses");
    std::string census_text, x_text, y_text, z_text, u_text, v_text;
    {
        CLI::App* c = leaf(census, "check", "validate a census and sum the Euler contributions");
        c->add_option("--census", census_text, "census JSON or file")->required();
        leaves.emplace_back(c, [&] {
            FiberCensus const cs = decode("--census", [&] { return json_io::census_from(json_io::load(census_text)); });
            CensusReport const r = validate_census(cs);
            return json{{"i1", r.i1}, {"ii", r.ii}, {"k", r.k}, {"fixed_circle_point", r.fixed_circle_point},
                        {"fixed_figure_eight", r.fixed_figure_eight}, {"non_fixed", r.non_fixed},
                        {"total_euler", total_euler(cs)}};
        });
    }
    {
        CLI::App* c = leaf(census, "dualize", "census of the mirror fibration");
        c->add_option("--census", census_text, "census JSON or file")->required();
        leaves.emplace_back(c, [&] {
            FiberCensus const cs = decode("--census", [&] { return json_io::census_from(json_io::load(census_text)); });
            return to_json(dualize_census(cs));
        });
    }
    {
        CLI::App* c = leaf(census, "embed", "image of a point of S² × S¹ in the base model");
        c->add_option("--x", x_text)->required();
        c->add_option("--y", y_text)->required();
        c->add_option("--z", z_text)->required();
        c->add_option("--u", u_text)->required();
        c->add_option("--v", v_text)->required();
        leaves.emplace_back(c, [&] {
            BasePoint const p(rational_flag("--x", x_text), rational_flag("--y", y_text), rational_flag("--z", z_text),
                              rational_flag("--u", u_text), rational_flag("--v", v_text));
            BaseImage const b = base_embed(p);
            return json{{"X", to_json(b.X)}, {"Y", to_json(b.Y)}, {"Z", to_json(b.Z)}, {"U", to_json(b.U)},
                        {"V", to_json(b.V)}, {"W", to_json(b.W)}, {"on_model", on_base_model(b)},
                        {"involution_invariant", base_embed(p.involution_image()) == b}};
        });
    }

    // leray
    CLI::App* leray = group("leray", "Leray spectral sequence bookkeeping");
    int rank_m = 1, degree = -1;
    bool swap = false;
    std::string b1_text, w1_text, b2_text, w2_text;
    auto table_json = [&](SpectralTable const& t, std::vector<long> const& betti) {
        json j = to_json(t);
        j["betti"] = betti;
        j["degenerates"] = check_degeneration(t, betti);
        if (degree >= 0) {
            Filtration const f = filtration(t, degree);
            j["filtration"] = json{{"degree", f.degree}, {"dims", f.dims}, {"quotients", f.quotients()}};
        }
        return j;
    };
    {
        CLI::App* c = leaf(leray, "k3", "E2 page for an elliptic K3 with polarization of rank r");
        c->add_option("--rank,--r", rank_m, "rank of M")->required()->check(CLI::Range(1, 20));
        c->add_option("--degree", degree, "also print the filtration on this degree");
        leaves.emplace_back(c, [&] { return table_json(k3_table(rank_m), k3_betti()); });
    }
    {
        CLI::App* c = leaf(leray, "elliptic", "E2 page for an elliptic curve over S¹");
        c->add_flag("--swap", swap, "exchange the fibre-degree rows");
        c->add_option("--degree", degree, "also print the filtration on this degree");
        leaves.emplace_back(c, [&] {
            SpectralTable const t = swap ? swap_rows(elliptic_table()) : elliptic_table();
            return table_json(t, torus_betti());
        });
    }
    {
        CLI::App* c = leaf(leray, "bv", "E2 page for the Borcea-Voisin threefold");
        c->add_option("--rank,--r", rank_m, "rank of M")->required()->check(CLI::Range(1, 19));
        c->add_option("--degree", degree, "also print the filtration on this degree");
        leaves.emplace_back(c, [&] { return table_json(bv_table(rank_m), y_betti(rank_m)); });
    }
    {
        CLI::App* c = leaf(leray, "bv-period",
                           "mirror period for M = U inside the K3 lattice, split along the second hyperbolic plane");
        c->add_option("--b1", b1_text, "K3 B-field (coordinates in M or ambient)")->required();
        c->add_option("--omega1", w1_text, "K3 Kähler class (coordinates in M or ambient)")->required();
        c->add_option("--b2", b2_text, "elliptic B-field")->required();
        c->add_option("--omega2", w2_text, "elliptic Kähler parameter")->required();
        leaves.emplace_back(c, [&] {
            StandardSetup const s = standard_setup();
            auto lift = [&](std::string const& flag, std::string const& text) {
                RationalVector v = decode(flag, [&] { return json_io::parse_rational_vector(text); });
                if (v.size() == s.polarization.rank())
                    return combine(s.polarization, v);
                if (v.size() != s.lattice.rank())
                    throw UsageError{flag, "expected 2 or 22 coordinates"};
                return v;
            };
            TubePoint const p{s.polarization, lift("--b1", b1_text), lift("--omega1", w1_text)};
            Rational const b2 = rational_flag("--b2", b2_text), w2 = rational_flag("--omega2", w2_text);
            TensorPeriod const t = bv_mirror_period(s.split, s.polarization, p, b2, w2);
            BVInput const back = recover_bv_input(t, s.polarization);
            json j = to_json(t);
            j["recovered"] = json{{"b1", to_json(back.kahler.b)}, {"omega1", to_json(back.kahler.omega)},
                                  {"b2", to_json(back.b2)}, {"omega2", to_json(back.omega2)}};
            j["factor_conditions"] = satisfies_factor_conditions(t, Sublattice::whole(s.lattice));
            return j;
        });
    }

    // verify
    CLI::App* verify = group("verify", "acceptance suite");
    std::uint64_t seed = kAcceptanceSeed;
    {
        CLI::App* c = leaf(verify, "all", "run every acceptance check");
        c->add_option("--seed", seed, "random seed");
        leaves.emplace_back(c, [&] {
            verify_results = run_acceptance(seed);
            verify_ran = true;
            json rs = json::array();
            for (auto const& r : verify_results)
                rs.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            return json{{"criteria", rs}};
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return 0;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (CLI::ParseError const& e) {
        // Help requested on a nested command.
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    auto found = std::find_if(leaves.begin(), leaves.end(), [](auto const& l) { return l.first->parsed(); });
    if (found == leaves.end()) {
        err << "usage error: no command given\n";
        return 2;
    }
    json result;
    try {
        result = found->second();
    } catch (UsageError const& u) {
        err << "usage error: " << u.flag << ": " << u.message << '\n';
        return 2;
    } catch (Error const& e) {
        json const j{{"error", {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}}}};
        if (output == "table")
            out << "error (" << kind_name(e.kind()) << "): " << e.what() << '\n';
        else
            out << j.dump() << '\n';
        return 1;
    }

    if (verify_ran && output == "table")
        print_verify_table(out, verify_results);
    else if (output == "table")
        print_table(out, result);
    else
        out << result.dump() << '\n';
    if (verify_ran)
        return std::all_of(verify_results.begin(), verify_results.end(), [](auto const& r) { return r.passed; }) ? 0 : 1;
    return 0;
}

} // namespace k3mirror::cli
