#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplane/linsys.hpp"

namespace triplane::classify {

enum class Kodaira { minus_infinity, zero, one, two, open };

std::string kodaira_name(Kodaira k);

struct TschirnhausenType {
    bool split = true;
    int deg1 = 0, deg2 = 0; // O(deg1) + O(deg2) when split
    std::string label;      // display form, also used for the non-split bundles
};

struct CatalogEntry {
    std::string name;
    int branch_degree; // even, >= 4
    std::string component_profile;
    std::optional<int> expected_cusps;
    TschirnhausenType tschirnhausen;
    std::optional<int> p_g, q; // nullopt = open
    Kodaira kodaira = Kodaira::minus_infinity;
    std::string source; // construction this entry records
    std::string notes;
    std::optional<linsys::LinearSystem> plane_system;
    std::vector<int> sc_degrees; // degrees of (a, b, c, d) when the bundle splits
    std::optional<int> moduli;
    bool pencil_of_lines = false;
};

// The classification table for branch degrees 4, 6, 8, 10 plus the
// degree-12 reference entries.
const std::vector<CatalogEntry>& catalog();
std::vector<CatalogEntry> catalog_for_degree(int branch_degree);

struct ConsistencyReport {
    struct Check {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Recomputes the catalog's numerology: moduli counts, genus relations
// g = h - 2, plane-system invariants, adjoint F-data, and the degree
// pattern of the structure constants against the bundle splitting.
ConsistencyReport verify_catalog_consistency();

} // namespace triplane::classify
