#include "k3mirror/json_io.hpp"

#include <fstream>
#include <sstream>

#include "k3mirror/catalog.hpp"

namespace k3mirror::json_io {

namespace {

[[noreturn]] void bad(std::string const& what)
{
    throw Error(ErrorKind::InvalidArgument, what);
}

json const& field(json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> split_commas(std::string const& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(item);
    if (!text.empty() && text.back() == ',')
        bad("trailing comma in list '" + text + "'");
    return parts;
}

std::string trim(std::string s)
{
    auto const b = s.find_first_not_of(" \t\n");
    auto const e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

} // namespace

json load(std::string const& text)
{
    std::string const t = trim(text);
    if (!t.empty() && (t.front() == '{' || t.front() == '[' || t.front() == '"')) {
        try {
            return json::parse(t);
        } catch (json::parse_error const& e) {
            bad(std::string("malformed JSON: ") + e.what());
        }
    }
    std::ifstream in(t);
    if (in) {
        try {
            return json::parse(in);
        } catch (json::parse_error const& e) {
            bad("malformed JSON in file " + t + ": " + e.what());
        }
    }
    return json(t);
}

Integer integer_from(json const& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_number_unsigned())
        return Integer(j.get<unsigned long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            bad("not an integer: " + j.dump());
        return z;
    }
    bad("not an integer: " + j.dump());
}

Rational rational_from(json const& j)
{
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational(integer_from(j));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    bad("not a rational (use a \"p/q\" string): " + j.dump());
}

json to_json(Integer const& z)
{
    if (z.fits_slong_p())
        return json(z.get_si());
    return json(z.get_str());
}

json to_json(Rational const& q)
{
    return json(to_string(q));
}

json to_json(ComplexRational const& z)
{
    return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

json to_json(LatticeVector const& v)
{
    json a = json::array();
    for (auto const& x : v)
        a.push_back(to_json(x));
    return a;
}

json to_json(RationalVector const& v)
{
    json a = json::array();
    for (auto const& x : v)
        a.push_back(to_json(x));
    return a;
}

json to_json(IntMatrix const& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

LatticeVector lattice_vector_from(json const& j)
{
    if (!j.is_array())
        bad("expected an array of integers");
    LatticeVector v;
    for (auto const& x : j)
        v.push_back(integer_from(x));
    return v;
}

RationalVector rational_vector_from(json const& j)
{
    if (!j.is_array())
        bad("expected an array of rationals");
    RationalVector v;
    for (auto const& x : j)
        v.push_back(rational_from(x));
    return v;
}

IntMatrix int_matrix_from(json const& j)
{
    if (!j.is_array())
        bad("expected a matrix (array of rows)");
    std::vector<std::vector<Integer>> rows;
    for (auto const& r : j)
        rows.push_back(lattice_vector_from(r));
    return IntMatrix::from_rows(rows);
}

LatticeVector parse_lattice_vector(std::string const& text)
{
    std::string const t = trim(text);
    if (!t.empty() && t.front() == '[')
        return lattice_vector_from(load(t));
    LatticeVector v;
    for (auto const& part : split_commas(t)) {
        Integer z;
        std::string const p = trim(part);
        if (p.empty() || z.set_str(p.front() == '+' ? p.substr(1) : p, 10) != 0)
            bad("not an integer: '" + part + "'");
        v.push_back(z);
    }
    return v;
}

RationalVector parse_rational_vector(std::string const& text)
{
    std::string const t = trim(text);
    if (!t.empty() && t.front() == '[')
        return rational_vector_from(load(t));
    RationalVector v;
    for (auto const& part : split_commas(t))
        v.push_back(parse_rational(trim(part)));
    return v;
}

IntegerLattice lattice_from(json const& j)
{
    if (j.is_string()) {
        auto l = catalog_lattice(j.get<std::string>());
        if (!l)
            bad("unknown catalog lattice \"" + j.get<std::string>() + "\" (expected U:m, E8- or K3)");
        return *l;
    }
    IntMatrix gram = int_matrix_from(field(j, "gram"));
    if (j.contains("rank")) {
        Integer const r = integer_from(j.at("rank"));
        if (r != static_cast<long>(gram.rows()))
            throw Error(ErrorKind::DimensionMismatch, "\"rank\" does not match the Gram matrix");
        if (gram.rows() == 0)
            return IntegerLattice();
    }
    return IntegerLattice(std::move(gram));
}

json to_json(IntegerLattice const& l)
{
    json g = to_json(l.gram());
    return json{{"rank", l.rank()}, {"gram", g}};
}

Sublattice sublattice_from(json const& j)
{
    if (j.is_object() && j.contains("ambient")) {
        IntegerLattice ambient = lattice_from(j.at("ambient"));
        json const& b = field(j, "basis");
        IntMatrix basis = b.empty() ? IntMatrix(0, ambient.rank()) : int_matrix_from(b);
        return Sublattice(std::move(ambient), std::move(basis));
    }
    return Sublattice::whole(lattice_from(j));
}

json to_json(Sublattice const& s)
{
    return json{{"ambient", to_json(s.ambient())}, {"basis", to_json(s.basis())}};
}

PeriodVector period_from(json const& j, Sublattice const& lattice)
{
    json const& p = j.is_object() && j.contains("period") ? j.at("period") : j;
    PeriodVector out{lattice, rational_vector_from(field(p, "re")), rational_vector_from(field(p, "im"))};
    std::size_t const n = lattice.ambient().rank();
    if (out.re.size() != n || out.im.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "period vectors must have length " + std::to_string(n));
    return out;
}

json to_json(PeriodVector const& p)
{
    return json{{"re", to_json(p.re)}, {"im", to_json(p.im)}};
}

json to_json(TubePoint const& p)
{
    return json{{"b", to_json(p.b)}, {"omega", to_json(p.omega)}};
}

LatticeInvolution involution_from(json const& j)
{
    return LatticeInvolution(lattice_from(field(j, "lattice")), int_matrix_from(field(j, "matrix")));
}

json to_json(LatticeInvolution const& rho)
{
    return json{{"lattice", to_json(rho.lattice())}, {"matrix", to_json(rho.matrix())}};
}

FiberCensus census_from(json const& j)
{
    FiberCensus c;
    c.bv.n = integer_from(field(j, "n")).get_si();
    c.bv.n_prime = integer_from(field(j, "nprime")).get_si();
    json const& fibers = field(j, "fibers");
    if (!fibers.is_array())
        bad("\"fibers\" must be an array");
    for (auto const& f : fibers) {
        FiberRecord r;
        auto k = parse_kodaira(field(f, "kodaira").get<std::string>());
        if (!k)
            bad("unknown Kodaira type " + f.at("kodaira").dump());
        r.kodaira = *k;
        r.fixed = field(f, "fixed").get<bool>();
        if (f.contains("real") && !f.at("real").is_null()) {
            auto t = parse_real_fiber_type(f.at("real").get<std::string>());
            if (!t)
                bad("unknown real fibre type " + f.at("real").dump());
            r.real = *t;
        }
        c.records.push_back(r);
    }
    return c;
}

json to_json(FiberCensus const& c)
{
    json fibers = json::array();
    for (auto const& r : c.records) {
        json f{{"kodaira", std::string(to_string(r.kodaira))}, {"fixed", r.fixed}};
        f["real"] = r.real ? json(std::string(to_string(*r.real))) : json(nullptr);
        fibers.push_back(f);
    }
    return json{{"n", c.bv.n}, {"nprime", c.bv.n_prime}, {"fibers", fibers}};
}

MirrorSplit split_from(json const& j)
{
    Sublattice t = sublattice_from(field(j, "lattice"));
    LatticeVector e = lattice_vector_from(field(j, "e"));
    LatticeVector ep = lattice_vector_from(field(j, "eprime"));
    long const m = integer_from(field(j, "m")).get_si();
    return construct_mirror(check_admissible(t, e, ep, m));
}

json to_json(MirrorSplit const& s)
{
    auto const& t = s.pair.transcendental;
    return json{{"lattice", to_json(t)},
                {"e", to_json(s.pair.e)},
                {"eprime", to_json(s.pair.e_prime)},
                {"m", s.pair.m},
                {"P", to_json(s.hyperbolic.basis())},
                {"M_check", to_json(s.mirror.basis())},
                {"M_check_gram", to_json(s.mirror.induced_gram())},
                {"section_class", to_json(s.section_class)},
                {"rank_T", t.rank()},
                {"rank_M_check", s.mirror.rank()},
                {"det_T", to_json(determinant(t.induced_gram()))},
                {"det_M_check", to_json(determinant(s.mirror.induced_gram()))},
                {"splitting_index", 1}};
}

json to_json(SpectralTable const& t)
{
    json entries = json::array();
    for (auto const& [pq, e] : t.entries) {
        json summands = json::array();
        for (auto const& s : e.summands)
            summands.push_back(json{{"label", s.label}, {"rank", s.rank}});
        entries.push_back(json{{"p", pq.first}, {"q", pq.second}, {"dim", e.dim()}, {"label", e.label()},
                               {"summands", summands}});
    }
    return json{{"entries", entries}, {"antidiagonal_sums", antidiagonal_sums(t)}};
}

json to_json(TensorPeriod const& t)
{
    json comps = json::array();
    for (auto const& label : t.labels)
        for (auto c : {EllipticClass::Sx, EllipticClass::Sy}) {
            ComplexRational const z = t.coefficient(label, c);
            if (z.is_zero())
                continue;
            comps.push_back(json{{"class", label}, {"factor", std::string(to_string(c))}, {"value", to_json(z)}});
        }
    json classes = json::object();
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        classes[t.labels[i]] = to_json(t.classes[i]);
    return json{{"components", comps}, {"classes", classes}};
}

json to_json(RotationTable const& t)
{
    json rows = json::object();
    for (auto const& r : t.rows)
        rows[std::string(1, r.label)] = json{{"holomorphic", json{{"re", to_json(r.holomorphic.re)},
                                                                  {"im", to_json(r.holomorphic.im)}}},
                                             {"kahler", to_json(r.kahler)}};
    return rows;
}

} // namespace k3mirror::json_io
