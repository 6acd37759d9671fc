#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "samelson/cohomology.hpp"
#include "samelson/products.hpp"

namespace samelson {
namespace report {

enum class Format { text, markdown, json };
Format parse_format(const std::string& s);

struct Options {
    Format format = Format::text;
    bool signed_coeffs = false;
};

// A P^1 table row, optionally annotated with the oracle's opinion
// ("agree" or a mismatch description).
struct P1Row {
    GeneratorDescriptor gen;
    ModPoly p1;
    std::optional<std::string> oracle;
};

std::string render_p1(const GroupSpec& g, const std::vector<P1Row>& rows, const Options& opt);
std::string render_table(const GroupSpec& g, const std::vector<SamelsonVerdict>& verdicts,
                         const Options& opt);
std::string render_normality(const NormalityReport& r, const Options& opt);
std::string render_mahowald(const MahowaldReport& r, const Options& opt);

// JSON fragments shared with the sweep document.
nlohmann::json pair_json(const SamelsonVerdict& v);
nlohmann::json normality_json(const NormalityReport& r);
nlohmann::json mahowald_json(const MahowaldReport& r);

}  // namespace report
}  // namespace samelson
