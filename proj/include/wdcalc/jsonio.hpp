#pragma once

#include <json.hpp>

#include "wdcalc/f2.hpp"
#include "wdcalc/packets.hpp"
#include "wdcalc/wdrep.hpp"

namespace wdcalc {

using Json = nlohmann::ordered_json;

// "1" for the identity, else "e0+e2" style over the ambient basis bits.
std::string element_label(F2Vec a);

// {constituents: [{char: {d, exp} | {op, d, exp}, n, mult}], dim, det, sign}
Json rep_json(const WDRep& A);

// {dim, generators: [label], values: [+-1 per generator],
//  table: [{element, value}]}
Json character_json(const SignCharacter& chi);

// Component-group shape plus an eta table and, for the SO kinds, the
// central sign of the enhancement.
Json packet_json(const EnhancedParam& e);

}  // namespace wdcalc
