#ifndef DEABENCH_REGIONS_HPP
#define DEABENCH_REGIONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace deabench {

/// The canonical 21-unit list: the 19 Italian regions with Trentino-Alto
/// Adige split into its two autonomous provinces ("Alto Adige", "Trentino").
/// Alphabetical; all emitted artifacts use this order.
const std::vector<std::string> &canonical_regions();

bool is_canonical_region(const std::string &name);

/// Maps common spellings ("PROV AUT BOLZANO", "P.A. Trento", "EMILIA
/// ROMAGNA", ...) to the canonical name. Returns nullopt for unknown names.
std::optional<std::string> normalize_region(const std::string &raw);

} // namespace deabench

#endif
