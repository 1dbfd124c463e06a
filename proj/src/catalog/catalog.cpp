#include "pvf/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pvf {

namespace {

const std::map<std::string, FixtureKind>& kind_names()
{
    static const std::map<std::string, FixtureKind> m{
        {"operator", FixtureKind::Operator},         {"ek_form", FixtureKind::EKForm},
        {"curve", FixtureKind::Curve},               {"parametrization", FixtureKind::Parametrization},
        {"riccati", FixtureKind::Riccati},           {"hamiltonian_pq", FixtureKind::HamiltonianPQ},
        {"jimbo_table", FixtureKind::JimboTable},
    };
    return m;
}

FixtureKind parse_kind(const std::string& s)
{
    auto it = kind_names().find(s);
    if (it == kind_names().end()) throw Error("unknown fixture kind '" + s + "'");
    return it->second;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string hex64(std::uint64_t h)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Fixture::Object parse_object(FixtureKind kind, const Json& p)
{
    switch (kind) {
    case FixtureKind::Operator:
        return operator_from_json(p);
    case FixtureKind::EKForm:
        return ekform_from_json(p);
    case FixtureKind::Curve:
        return multipoly_from_json(p);
    case FixtureKind::Parametrization:
        return Parametrization{multifraction_from_json(p.at("S0")), multifraction_from_json(p.at("S1"))};
    case FixtureKind::Riccati:
        return RiccatiData{multifraction_from_json(p.at("beta2")), multifraction_from_json(p.at("beta1")),
                           multifraction_from_json(p.at("beta0"))};
    case FixtureKind::HamiltonianPQ: {
        HamiltonianData d;
        d.n1 = rational_from_json(p.at("n1"));
        d.n2 = rational_from_json(p.at("n2"));
        d.n3 = rational_from_json(p.at("n3"));
        d.n4 = rational_from_json(p.at("n4"));
        d.p = multifraction_from_json(p.at("p"));
        d.q = multifraction_from_json(p.at("q"));
        return d;
    }
    case FixtureKind::JimboTable: {
        JimboTable t;
        for (const auto& [k, v] : p.items()) t.entries.emplace(k, multifraction_from_json(v));
        return t;
    }
    }
    throw Error("unhandled fixture kind");
}

}  // namespace

std::string to_string(FixtureKind k)
{
    for (const auto& [name, v] : kind_names())
        if (v == k) return name;
    return "?";
}

RationalFunction JimboTable::at(const std::string& key, const Rational& N) const
{
    auto it = entries.find(key);
    if (it == entries.end()) throw Error("jimbo table has no entry '" + key + "'");
    Poly num = it->second.num.evaluate("N", N).to_poly("alpha");
    Poly den = it->second.den.evaluate("N", N).to_poly("alpha");
    if (den.is_zero()) throw Error("jimbo table entry '" + key + "' degenerates at this N");
    return RationalFunction(num, den);
}

Fixture::Fixture(std::string name, FixtureKind kind, std::string provenance, Json payload)
    : name_(std::move(name)), kind_(kind), provenance_(std::move(provenance)), payload_(std::move(payload))
{
    if (provenance_.empty()) throw Error("fixture " + name_ + " has no provenance");
    try {
        object_ = parse_object(kind_, payload_);
    } catch (const std::exception& e) {
        throw Error("fixture " + name_ + ": payload does not parse as " + to_string(kind_) + ": " + e.what());
    }
}

template <class T> const T& Fixture::get(FixtureKind want) const
{
    if (kind_ != want) throw Error("fixture " + name_ + " is a " + to_string(kind_) + ", not a " + to_string(want));
    return std::get<T>(object_);
}

const DiffOperator& Fixture::as_operator() const { return get<DiffOperator>(FixtureKind::Operator); }
const EKPolynomial& Fixture::as_ek_form() const { return get<EKPolynomial>(FixtureKind::EKForm); }
const MultiPoly& Fixture::as_curve() const { return get<MultiPoly>(FixtureKind::Curve); }
const Parametrization& Fixture::as_parametrization() const { return get<Parametrization>(FixtureKind::Parametrization); }
const RiccatiData& Fixture::as_riccati() const { return get<RiccatiData>(FixtureKind::Riccati); }
const HamiltonianData& Fixture::as_hamiltonian() const { return get<HamiltonianData>(FixtureKind::HamiltonianPQ); }
const JimboTable& Fixture::as_jimbo_table() const { return get<JimboTable>(FixtureKind::JimboTable); }

Catalog::Catalog(const std::string& dir) : dir_(dir)
{
    Json manifest;
    try {
        manifest = Json::parse(read_file(dir_ + "/manifest.json"));
    } catch (const Json::exception& e) {
        throw Error("malformed fixture manifest: " + std::string(e.what()));
    }
    for (const auto& entry : manifest.at("fixtures")) {
        const auto name = entry.at("name").get<std::string>();
        const auto file = entry.at("file").get<std::string>();
        const std::string bytes = read_file(dir_ + "/" + file);
        const std::string sum = hex64(fnv1a64(bytes));
        if (sum != entry.at("fnv1a64").get<std::string>())
            throw Error("checksum mismatch for fixture " + name + " (" + file + ")");
        Json j = Json::parse(bytes);
        if (j.at("name").get<std::string>() != name) throw Error("fixture file " + file + " names another fixture");
        const auto kind = parse_kind(j.at("kind").get<std::string>());
        if (to_string(kind) != entry.at("kind").get<std::string>()) throw Error("fixture " + name + ": kind differs from manifest");
        fixtures_.emplace(name, Fixture(name, kind, j.at("provenance").get<std::string>(), j.at("payload")));
    }
}

const Fixture& Catalog::get(const std::string& name) const
{
    auto it = fixtures_.find(name);
    if (it != fixtures_.end()) return it->second;
    std::string msg = "no such fixture '" + name + "'; candidates:";
    for (const auto& n : names()) msg += " " + n;
    throw Error(msg);
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& [n, f] : fixtures_) out.push_back(n);
    return out;
}

std::string fixture_dir()
{
    if (const char* env = std::getenv("PVF_FIXTURE_DIR"); env && *env) return env;
    return PVF_DEFAULT_FIXTURE_DIR;
}

const Catalog& default_catalog()
{
    static const Catalog catalog(fixture_dir());
    return catalog;
}

const Fixture& fixture(const std::string& name) { return default_catalog().get(name); }

std::vector<std::string> fixture_names() { return default_catalog().names(); }

long order_formula(long N, long M)
{
    if (N < 0 || M < 0) throw Error("order formula needs nonnegative N, M");
    const long d = M - N;
    const long sign = (d % 2 == 0) ? 1 : -1;
    const long num = (M + N + 2) * (4 + (3 - sign) * std::labs(d));
    if (num % 8 != 0) throw Error("formula inapplicable: q = " + std::to_string(num) + "/8 is not an integer");
    return num / 8;
}

}  // namespace pvf
