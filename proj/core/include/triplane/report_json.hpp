#pragma once

#include <json.hpp>

#include "triplane/classify.hpp"
#include "triplane/structure.hpp"

namespace triplane {

// All report schemas carry {"schema": 1}; polynomials are serialized in the
// canonical text grammar, extension-coefficient polynomials as
// rational_part + radical_part * sqrt(radicand).

nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const HPoly& p);
nlohmann::json to_json(const XHPoly& p);
nlohmann::json to_json(const XPlanePoint& p);
nlohmann::json to_json(const PlanePoint& p);

nlohmann::json to_json(const cover::BranchCurve& b);
nlohmann::json to_json(const cover::DoubleBranchWitness& w);
nlohmann::json to_json(const cover::PencilOfLines& p);
nlohmann::json to_json(const cover::CommonSquarePart& c);

nlohmann::json to_json(const sing::SingularityRecord& r);
nlohmann::json to_json(const sing::SingularCensus& c);
nlohmann::json to_json(const sing::CuspCensus& c);

nlohmann::json to_json(const algebra::StructureConstants& sc, const algebra::DerivedABC& abc,
                       const algebra::RelationResiduals& residuals);
nlohmann::json to_json(const algebra::FlexTangentReport& r);

nlohmann::json to_json(const linsys::LinearSystem& s);
nlohmann::json to_json(const linsys::NumericalInvariants& inv);
nlohmann::json to_json(const linsys::EmptinessCertificate& c);

nlohmann::json to_json(const classify::CatalogEntry& e);
nlohmann::json to_json(const classify::ClassificationReport& r);
nlohmann::json to_json(const classify::ConsistencyReport& r);

} // namespace triplane
