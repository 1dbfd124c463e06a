#pragma once

#include "pvf/correlations.hpp"
#include "pvf/diffop.hpp"
#include "pvf/multipoly.hpp"
#include "pvf/painleve.hpp"
#include "pvf/serialize.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace pvf {

enum class FixtureKind { Operator, EKForm, Curve, Parametrization, Riccati, HamiltonianPQ, JimboTable };

std::string to_string(FixtureKind k);

/// Reduced local-expansion coefficients as fractions in alpha and N.
struct JimboTable {
    std::map<std::string, MultiFraction> entries;
    /// Entry `key` with N specialized, as a rational function of alpha.
    RationalFunction at(const std::string& key, const Rational& N) const;
};

class Fixture {
public:
    using Object = std::variant<DiffOperator, EKPolynomial, MultiPoly, Parametrization, RiccatiData, HamiltonianData, JimboTable>;

    /// Parses `payload`; throws when it does not match `kind`.
    Fixture(std::string name, FixtureKind kind, std::string provenance, Json payload);

    const std::string& name() const { return name_; }
    FixtureKind kind() const { return kind_; }
    const std::string& provenance() const { return provenance_; }
    const Json& payload() const { return payload_; }

    const DiffOperator& as_operator() const;
    const EKPolynomial& as_ek_form() const;
    const MultiPoly& as_curve() const;
    const Parametrization& as_parametrization() const;
    const RiccatiData& as_riccati() const;
    const HamiltonianData& as_hamiltonian() const;
    const JimboTable& as_jimbo_table() const;

private:
    template <class T> const T& get(FixtureKind want) const;

    std::string name_;
    FixtureKind kind_;
    std::string provenance_;
    Json payload_;
    Object object_;
};

/// Fixtures read from a directory holding manifest.json. Every file is
/// checked against its manifest checksum and parsed at load time.
class Catalog {
public:
    explicit Catalog(const std::string& dir);

    /// Throws "no such fixture" listing the registered names.
    const Fixture& get(const std::string& name) const;
    std::vector<std::string> names() const;
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    std::map<std::string, Fixture> fixtures_;
};

/// $PVF_FIXTURE_DIR when set, otherwise the build-time data directory.
std::string fixture_dir();

/// The process-wide catalog, loaded on first use.
const Catalog& default_catalog();

const Fixture& fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// q = (M+N+2)(4 + (3 - (-1)^{M-N})|M-N|)/8; throws "formula inapplicable"
/// when q is not an integer.
long order_formula(long N, long M);

}  // namespace pvf
