#ifndef ogs_json_io_hpp
#define ogs_json_io_hpp

#include <json.hpp>
#include <string>

#include "ogs/counting.hpp"
#include "ogs/index_sets.hpp"
#include "ogs/root_lattice.hpp"
#include "ogs/standard_monomials.hpp"

// JSON forms used by the CLI and the file interfaces:
//   index element  [1,2,5,6]
//   monomial       [{"r":6,"c":1,"mult":2}, ...] in canonical order
//   standard mono  {"thetas":[[...],[...]], "degree":n}
//   path tuple     [[{"r":..,"c":..}, ...], ...] per element of S_w(up)
//   instance file  {"d":7, "v":[...], "w":[...]}
namespace ogs {

nlohmann::json id_to_json(const IdElement& a);
nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const RootRegions& rr, const nlohmann::json& j, Region tag);
nlohmann::json sm_to_json(const StandardMonomial& sm, const IdElement& v);
nlohmann::json path_tuple_to_json(const PathTuple& tuple);
PathTuple path_tuple_from_json(const nlohmann::json& j);

struct Instance {
    IdElement v;
    IdElement w;
};

Instance instance_from_json(const nlohmann::json& j);

} // namespace ogs

#endif
