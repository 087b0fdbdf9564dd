#pragma once

#include "shufalg/shuffle.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shufalg {

struct SuiteConfig {
    RootSystem rs = RootSystem::G2();
    Flavor flavor = Flavor::Trig;
    int lo = 0;
    int hi = 1;
    int max_vars = 5;
    uint64_t seed = 42;
    // random draws per randomized check; 0 picks the suite default
    int samples = 0;
    // seconds; 0 means unlimited
    double budget = 0;
    // empty: suite default
    std::vector<Grading> gradings;
};

struct Failure {
    std::string check;
    nlohmann::json input;
    std::string detail;
};

struct Control {
    std::string name;
    bool detected = false;
};

struct SuiteReport {
    std::string name;
    std::string anchor;
    std::string type;
    std::string flavor;
    size_t checks = 0;
    std::vector<Failure> failures;
    std::vector<Control> controls;
    nlohmann::json info = nlohmann::json::object();
    double elapsed = 0;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// displayed closed form of Psi of a tilde root vector (trig: sign +-1, G2 and B; rational: sign ignored);
// nullopt when no closed form is displayed
std::optional<ShuffleElement> displayed_root_image(const ShuffleContext& ctx, int beta, int s, int sign,
                                                   const std::vector<int>& dec);
// weight of each free parameter in s for the tilde decomposition of beta
std::vector<int> tilde_weights(const RootSystem& rs, int beta);

SuiteReport suite_homomorphism(const SuiteConfig& cfg);
SuiteReport suite_root_images(const SuiteConfig& cfg);
SuiteReport suite_diagonal(const SuiteConfig& cfg);
SuiteReport suite_vanishing(const SuiteConfig& cfg);
SuiteReport suite_factorization(const SuiteConfig& cfg);
SuiteReport suite_triangular_independence(const SuiteConfig& cfg);
SuiteReport suite_integral_forms(const SuiteConfig& cfg);
SuiteReport suite_yangian(const SuiteConfig& cfg);
SuiteReport suite_ybe(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
bool suite_applies(const std::string& name, const SuiteConfig& cfg);
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
// every applicable suite
std::vector<SuiteReport> run_all(const SuiteConfig& cfg);
nlohmann::json aggregate_json(const std::vector<SuiteReport>& reports);

}  // namespace shufalg
