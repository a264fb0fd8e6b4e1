#pragma once

#include <string>

#include "hcs/height.hpp"
#include "hcs/matching.hpp"
#include "hcs/shuffle.hpp"

namespace hcs {

/// {"scheme":"canonical|middle_third","depth":n,"levels":[[{"lo":"p/q","hi":"p/q"},...],...]}
std::string cantor_to_json(const CantorApprox& c);
CantorPtr cantor_from_json(const std::string& text);

/// {"cantor": <cantor json>, "values":[{"address":[...],"l":"p/q"},...]}
std::string hairset_to_json(const LengthModel& m);
LengthModel hairset_from_json(const std::string& text);

/// Full dump of a matched pair including every recorded ratio.
std::string pair_to_json(const MatchedNestPair& pair);

/// Certificate of a shuffle run: every checked inequality with exact values.
std::string shuffle_certificate_json(const std::vector<ShuffleStage>& stages,
                                     const ShuffleRunReport& report);

/// {"points":[0,...],"dist":[["p/q",...],...],"chains":[[...],...]}
std::string hairdata_to_json(const AbstractHairData& d, const FiniteMetricSpace& s);
std::pair<AbstractHairData, FiniteMetricSpace> hairdata_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hcs
