#pragma once

// JSON encodings and the textual weight / label literals used by the CLI.
//
// Literal grammar (entries comma-separated, components separated by '|'):
//   SU weight    "1,0,0|0,0"         lambda' | lambda''
//   SOe weight   "p=2;1,1"
//   SO* weight   "1,0,-1"
//   SU label     "1,0|0|3"           mu' | mu'' | p   (components may be empty)
//   SOe label    "q=1;1,0"
//   SO* label    "1,0|2"             nu | p
//   virtual char "2*<label> + -1*<label>", coefficient optional.

#include <string>
#include <string_view>

#include <json.hpp>

#include "branchkit/ansatz.hpp"
#include "branchkit/virtual_char.hpp"

namespace branchkit {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const KMLabel& l);
Json to_json(const KWeight& w);
Json to_json(const VirtualChar& vc);
Json to_json(const KVirtualChar& vc);
Json terms_json(const VirtualChar& vc);
Json terms_json(const KVirtualChar& vc);
Json to_json(const Certificate& c);
Json to_json(const MembershipResult& r);
Json to_json(const GroupFamily& f, const WeylTerm& t);
Json to_json(const CGroup& g);
Json to_json(const KWeight& w, const Verdict& v);
Json to_json(const ExploreRow& row);

KMLabel label_from_json(const GroupFamily& f, const Json& j);
KWeight weight_from_json(const GroupFamily& f, const Json& j);
VirtualChar virtual_char_from_json(const Json& j);

// Throw validation_error naming the offending token.
KWeight parse_weight(const GroupFamily& f, std::string_view text);
KMLabel parse_label(const GroupFamily& f, std::string_view text);
VirtualChar parse_virtual_char(const GroupFamily& f, std::string_view text);

// Colon-joined coordinates, for TSV output.
std::string flat(std::span<const int> coords);

}  // namespace branchkit
