#ifndef QREAL_IDENTITY_LAB_HPP
#define QREAL_IDENTITY_LAB_HPP

#include "qreal/real_spec.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qreal {

enum class EvalMode { exact, series };

/// expected_inequality is the passing outcome of a must-fail case.
enum class Verdict { pass, expected_inequality, fail, unexpected_equality, error };

bool is_unexpected(Verdict v);
std::string to_string(EvalMode m);
std::string to_string(Verdict v);

/// Parameters of one instance. Only the fields named by the catalog
/// entry's `params` are meaningful.
struct Binding {
    RealSpec alpha = BigRational(0);
    long k = 0;
    long n = 0;
    long m = 0;
    long l = 0;
};

struct IdentityInfo {
    std::string id;
    /// Letters of the bound parameters: a (alpha), k, n, m, l.
    std::string params;
    /// False for the must-fail inequality cases.
    bool expect_equal = true;
    bool exact_capable = true;
    bool rational_only = false;
    std::string statement;
};

const std::vector<IdentityInfo>& identity_catalog();
/// Throws DomainError for an unknown id.
const IdentityInfo& identity_info(const std::string& id);

std::string binding_to_string(const Binding& b, const std::string& params);

struct Witness {
    std::string lhs;
    std::string rhs;
};

struct IdentityCase {
    std::string id;
    Binding binding;
    EvalMode mode = EvalMode::exact;
    Verdict verdict = Verdict::error;
    /// First differing pair, or the error message in lhs for Verdict::error.
    std::optional<Witness> witness;
};

/// Evaluates both sides of catalog entry `id` at `binding`. Series mode
/// compares every coefficient below q^N; x-series identities use x^0..x^K.
/// Throws DomainError for bindings outside the identity's domain or an
/// exact mode request it cannot honour; NonConvergence propagates.
IdentityCase verify_identity(const std::string& id, const Binding& binding, EvalMode mode, long N = 32,
                             long K = 6);

/// Exact when the identity supports it and alpha is rational.
EvalMode preferred_mode(const std::string& id, const Binding& binding);

struct SuiteConfig {
    /// "ALL", or comma-separated ids; an entry also selects every id it
    /// prefixes up to an underscore (BRACE_PROPS selects BRACE_PROPS_A..E).
    std::string filter = "ALL";
    long trials = 25;
    std::uint64_t seed = 7;
    long N = 32;
    long K = 6;
    /// OpenMP threads; 0 uses the default team.
    int jobs = 0;
};

struct IdentitySummary {
    std::string id;
    long cases = 0;
    long passed = 0;
    long unexpected = 0;
    std::optional<IdentityCase> first_counterexample;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<IdentitySummary> identities;
    std::vector<IdentityCase> cases;
    long unexpected = 0;

    std::string text() const;
    nlohmann::json to_json() const;
};

/// Ids selected by a filter, in catalog order. Throws DomainError when an
/// entry matches nothing.
std::vector<std::string> select_identities(const std::string& filter);

/// Bindings for `trials` instances of `id`, drawn from a generator seeded by
/// (seed, catalog index); fixed-binding entries yield a single binding.
std::vector<Binding> generate_bindings(const std::string& id, long trials, std::uint64_t seed);

/// Runs every selected identity over its generated bindings. Cases run
/// concurrently; the report depends only on the config (jobs aside).
/// Errors inside a case become Verdict::error. Throws DomainError for
/// trials < 1 or a bad filter.
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::json to_json(const IdentityCase& c);

} // namespace qreal

#endif
