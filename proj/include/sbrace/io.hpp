#pragma once

#include <string>

#include <json.hpp>

#include "sbrace/cohomology_rb.hpp"
#include "sbrace/cohomology_rrb.hpp"
#include "sbrace/cohomology_sb.hpp"
#include "sbrace/rota_baxter.hpp"
#include "sbrace/yang_baxter.hpp"

namespace sbrace::io {

using Json = nlohmann::json;

// Parsing failures and shape mismatches throw AlgebraError(InvalidInput);
// algebraic failures keep their own codes.
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
// Sorted keys, compact, trailing newline.
std::string canonical(const Json& j);
std::string kind_of(const Json& j);

Json to_json(const FiniteGroup& g);
Json to_json(const ElementMap& m);
Json to_json(const GroupAction& a);
Json to_json(const SkewBrace& b);
Json to_json(const RBOperator& r);
Json to_json(const RRBGroup& q);
Json to_json(const YBESolution& s);
Json to_json(const SbCochain& c);
Json to_json(const RbCochain& c);
Json to_json(const RrbCochain& c);
Json to_json(const Cochain2& c);
Json triplet_to_json(const ActionTriplet& t);
Json rb_module_to_json(const RBModule& m);
Json rrb_module_to_json(const RRBModule& m);

FiniteGroup group_from_json(const Json& j);
ElementMap map_from_json(const Json& j);
GroupAction action_from_json(const Json& j, const FiniteGroup& actor, const FiniteGroup& space);
SkewBrace brace_from_json(const Json& j);
RBOperator rb_from_json(const Json& j);
RRBGroup rrb_from_json(const Json& j);
YBESolution ybe_from_json(const Json& j);
SbCochain sb_cochain_from_json(const Json& j, const ActionTriplet& t);
RbCochain rb_cochain_from_json(const Json& j, const RBModule& m);
RrbCochain rrb_cochain_from_json(const Json& j, const RRBModule& m);
ActionTriplet triplet_from_json(const Json& j, const SkewBrace& base, const FiniteGroup& coeff);
RBModule rb_module_from_json(const Json& j, const RBOperator& base);
RRBModule rrb_module_from_json(const Json& j, const RRBGroup& base);

Json subset_to_json(const Subset& s);
Subset subset_from_json(const Json& j, int order);

}  // namespace sbrace::io
