#pragma once

#include <string>

#include "tdc/coloring.hpp"
#include "tdc/domination.hpp"
#include "tdc/formulas.hpp"
#include "tdc/reduction.hpp"
#include "tdc/solver.hpp"
#include "tdc/tree.hpp"

namespace tdc {

/// JSON renderings of the report types. Keys are emitted in sorted order, so
/// identical inputs give byte-identical output.
std::string to_json(const Coloring& c);
std::string to_json(const TreeProfile& p);
std::string to_json(const DominationResult& r);
std::string to_json(const SolveReport& r, const std::string& invariant);
std::string to_json(const BoundsRecord& r);
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<ComparisonRow>& rows);
std::string to_json(const ReductionCheck& r);

} // namespace tdc
