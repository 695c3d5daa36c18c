#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplane/catalog.hpp"
#include "triplane/cover.hpp"
#include "triplane/singular.hpp"

namespace triplane::classify {

struct ClassificationReport {
    cover::BranchCurve branch;
    bool cyclic = false;
    std::optional<cover::CommonSquarePart> common_square;
    std::optional<cover::DoubleBranchWitness> double_witness;
    std::string double_witness_note; // extension-needed diagnostics and the like
    std::optional<cover::PencilOfLines> pencil_of_lines;
    std::vector<int> component_degrees; // known components of the reduced branch
    int unfactored_remainder_degree = 0;
    sing::SingularCensus census;
    std::optional<sing::CuspCensus> cusp_census;

    struct Match {
        std::string name;
        std::string confidence;
    };
    std::vector<Match> matches; // all non-excluded catalog entries
    std::vector<std::string> annotations;
};

// Full census of a cover datum: branch factorization, cyclicity, all-double
// detection, pencil structure, singular census, cusp accounting, and catalog
// matching by necessary conditions.
ClassificationReport branch_census(const cover::CoverDatum& datum);

struct ExampleResult {
    std::string name;
    std::string description;
    bool ok;
    std::string detail;
};

// The built-in constructions with their asserted identities.
std::vector<ExampleResult> run_builtin_examples();

} // namespace triplane::classify
