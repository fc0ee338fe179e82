#ifndef DEABENCH_PANEL_IO_HPP
#define DEABENCH_PANEL_IO_HPP

#include <filesystem>

#include "deabench/indices.hpp"

namespace deabench {

/// Loads a long-format panel CSV with header `region,year,indicator,value`
/// (UTF-8, dot decimals, LF or CRLF). Region names are normalized through the
/// alias table; unknown regions, duplicate keys and non-numeric values raise
/// data_error with file:line locations.
IndicatorPanel load_panel(const std::filesystem::path &path);

} // namespace deabench

#endif
