#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Self-checks runnable from the command line: each row is one named check with a verdict.
namespace fungal::suites {

struct Row {
    std::string name;
    bool passed = false;
    std::string detail;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> names();  // gadgets, predictors, reduction, figures
std::vector<Row> run(std::string_view suite, std::uint64_t seed);

std::vector<Row> gadgets();
std::vector<Row> predictors(std::uint64_t seed, int random_instances = 1000);
std::vector<Row> reduction(std::uint64_t seed, int random_circuits = 20);
std::vector<Row> figures();

}  // namespace fungal::suites
