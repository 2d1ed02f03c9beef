#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "quadideal/approx.hpp"
#include "quadideal/classes.hpp"
#include "quadideal/content.hpp"
#include "quadideal/singular.hpp"

namespace quadideal {

struct SizeLimits {
    int max_exponent = 4;
    long max_height = 10000;
};

struct InstanceProfile {
    OrderPtr order;
    std::vector<PrimeIdealData> prime_pool; // nonempty
    std::uint64_t seed = 0;
    SizeLimits limits;
};

// Pool = all primes above the first few rational primes (singular ones
// included; valuation checks skip them).
InstanceProfile default_profile(const OrderPtr& order, std::uint64_t seed = 0);

// Product of random prime powers from the pool times a random principal
// ideal; reproducible from the rng state.
FractionalIdeal random_ideal(const InstanceProfile& profile, std::mt19937_64& rng);
IntegralIdeal random_integral_ideal(const InstanceProfile& profile, std::mt19937_64& rng);
// Single-shot variant seeded from profile.seed.
FractionalIdeal random_ideal(const InstanceProfile& profile);

Element random_element(const InstanceProfile& profile, std::mt19937_64& rng,
                       bool allow_denominator);

struct SuiteFailure {
    int case_index;
    std::string law;
    std::string witness; // replayable CLI ideal-literal grammar
};

struct SuiteReport {
    std::string suite;
    std::string ring;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::vector<SuiteFailure> failures; // first counterexample per suite
    std::vector<std::string> failed_laws;

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

// Runs one of the named law suites; throws domain_error for unknown names.
SuiteReport run_suite(const std::string& name, const InstanceProfile& profile, int cases);

// Replayable serialization of an ideal in the CLI expression grammar.
std::string ideal_literal(const FractionalIdeal& i);
std::string ideal_literal(const IntegralIdeal& i);

} // namespace quadideal
