#pragma once

#include "l2rank/bounds.hpp"
#include "l2rank/cosets.hpp"
#include "l2rank/homology.hpp"
#include "l2rank/integer_matrix.hpp"
#include "l2rank/marked.hpp"
#include "l2rank/quotients.hpp"
#include "l2rank/spectral.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace l2rank {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json to_json(const BigInt& v);
Json matrix_json(const IntegerMatrix& m);
Json to_json(const Betti1& h);
Json to_json(const SNFResult& snf);
Json to_json(const BoundReport& report);

/// {"index": m, "action": {gen: [images 1..m]}}.
Json coset_table_json(const Presentation& p, const CosetTable& t);

Json luck_report_json(const Presentation& p, const QuotientChain& chain, const BettiEstimate& estimate);

/// Rounded to 12 decimals so reports are stable against last-bit noise.
double rounded(double x);

Json spectral_json(const std::string& matrix_text, const SpectralMeasure& measure,
                   const std::map<int, MomentComparison>& moments);

Json log_bound_json(const LogBoundReport& report);
/// measure,eps,mu_zero,mu_below_eps,rhs,holds
std::string log_bound_csv(const LogBoundReport& report);

Json distance_json(const Presentation& names, const DistanceReport& report);

}  // namespace l2rank
