#include "deabench/regions.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace deabench {

const std::vector<std::string> &canonical_regions() {
    static const std::vector<std::string> regions = {
        "Abruzzo",
        "Alto Adige",
        "Basilicata",
        "Calabria",
        "Campania",
        "Emilia-Romagna",
        "Friuli-Venezia Giulia",
        "Lazio",
        "Liguria",
        "Lombardia",
        "Marche",
        "Molise",
        "Piemonte",
        "Puglia",
        "Sardegna",
        "Sicilia",
        "Toscana",
        "Trentino",
        "Umbria",
        "Valle d'Aosta",
        "Veneto",
    };
    return regions;
}

bool is_canonical_region(const std::string &name) {
    const auto &regions = canonical_regions();
    return std::find(regions.begin(), regions.end(), name) != regions.end();
}

namespace {

// Upper-case, strip accents we care about, collapse separators. "P.A. Bolzano",
// "PROV AUT BOLZANO" and "p a bolzano" all fold to the same key.
std::string fold(const std::string &raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) {
            out.push_back(static_cast<char>(std::toupper(u)));
        } else if (c == '\'' || c == '.' || c == '-' || c == ' ' || c == '_') {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

const std::unordered_map<std::string, std::string> &alias_table() {
    static const std::unordered_map<std::string, std::string> table = [] {
        std::unordered_map<std::string, std::string> t;
        for (const auto &r : canonical_regions()) t.emplace(fold(r), r);
        auto add = [&t](const char *alias, const char *canon) { t.emplace(fold(alias), canon); };
        add("PROV AUT BOLZANO", "Alto Adige");
        add("P.A. BOLZANO", "Alto Adige");
        add("P. A. BOLZANO", "Alto Adige");
        add("PROVINCIA AUTONOMA DI BOLZANO", "Alto Adige");
        add("BOLZANO", "Alto Adige");
        add("SUDTIROL", "Alto Adige");
        add("PROV AUT TRENTO", "Trentino");
        add("P.A. TRENTO", "Trentino");
        add("P. A. TRENTO", "Trentino");
        add("PROVINCIA AUTONOMA DI TRENTO", "Trentino");
        add("TRENTO", "Trentino");
        add("EMILIA ROMAGNA", "Emilia-Romagna");
        add("FRIULI VENEZIA GIULIA", "Friuli-Venezia Giulia");
        add("FRIULI V.G.", "Friuli-Venezia Giulia");
        add("FRIULI VG", "Friuli-Venezia Giulia");
        add("VALLE D AOSTA", "Valle d'Aosta");
        add("VALLE DAOSTA", "Valle d'Aosta");
        add("VAL D'AOSTA", "Valle d'Aosta");
        return t;
    }();
    return table;
}

} // namespace

std::optional<std::string> normalize_region(const std::string &raw) {
    const auto &table = alias_table();
    auto it = table.find(fold(raw));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

} // namespace deabench
