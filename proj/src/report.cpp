#include "samelson/report.hpp"

namespace samelson {
namespace report {

using nlohmann::json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "markdown") return Format::markdown;
    if (s == "json") return Format::json;
    throw usage_error("format must be text, markdown or json, got '" + s + "'");
}

namespace {

std::string pair_label(const SamelsonVerdict& v) {
    return "<" + v.a.label() + ", " + v.b.label() + ">";
}

std::string agree_str(const SamelsonVerdict& v) {
    if (v.edge) return "edge-case: criteria-disagree";
    if (!v.agree) return "n/a";
    return *v.agree ? "yes" : "NO";
}

// Matrix cell for one verdict: nontrivial / trivial / no answer.
std::string cell_symbol(Verdict v, bool edge) {
    if (edge) return "?";
    switch (v) {
        case Verdict::nontrivial: return "x";
        case Verdict::trivial: return "-";
        case Verdict::unsupported: return "?";
    }
    return "?";
}

std::string group_header(const GroupSpec& g) {
    std::string s = g.name() + "  p = " + std::to_string(g.p);
    s += is_p_regular(g) ? "  (p-regular)" : "  (not p-regular)";
    return s;
}

}  // namespace

std::string render_p1(const GroupSpec& g, const std::vector<P1Row>& rows, const Options& opt) {
    if (opt.format == Format::json) {
        json doc;
        doc["group"] = g.name();
        doc["p"] = g.p;
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["generator"] = r.gen.name;
            jr["halfdeg"] = r.gen.halfdeg;
            jr["p1"] = r.p1.str(opt.signed_coeffs);
            if (r.oracle) jr["oracle"] = *r.oracle;
            jrows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(jrows);
        return doc.dump(2) + "\n";
    }
    std::string out;
    if (opt.format == Format::markdown) {
        out += "### " + group_header(g) + "\n\n";
        out += "| generator | halfdeg | P1 |\n| --- | --- | --- |\n";
        for (const auto& r : rows) {
            out += "| `" + r.gen.name + "` | " + std::to_string(r.gen.halfdeg) + " | `" +
                   r.p1.str(opt.signed_coeffs) + "`";
            if (r.oracle) out += " (oracle: " + *r.oracle + ")";
            out += " |\n";
        }
        return out;
    }
    for (const auto& r : rows) {
        out += "P1(" + r.gen.name + ") = " + r.p1.str(opt.signed_coeffs) + "\n";
        if (r.oracle) out += "oracle: " + *r.oracle + "\n";
    }
    return out;
}

json pair_json(const SamelsonVerdict& v) {
    json jp;
    jp["a"] = v.a.label();
    jp["b"] = v.b.label();
    jp["p1"] = verdict_str(v.p1);
    jp["closed_form"] = verdict_str(v.closed_form);
    json jw = json::array();
    for (const auto& w : v.witnesses) {
        json x;
        x["k"] = w.generator;
        x["c"] = w.coeff.value();
        jw.push_back(std::move(x));
    }
    jp["witnesses"] = std::move(jw);
    if (v.edge)
        jp["agree"] = "edge-case: criteria-disagree";
    else if (v.agree)
        jp["agree"] = *v.agree;
    else
        jp["agree"] = nullptr;
    return jp;
}

std::string render_table(const GroupSpec& g, const std::vector<SamelsonVerdict>& verdicts,
                         const Options& opt) {
    if (opt.format == Format::json) {
        json doc;
        doc["group"] = g.name();
        doc["family"] = family_name(g.family);
        doc["p"] = g.p;
        json jp = json::array();
        for (const auto& v : verdicts) jp.push_back(pair_json(v));
        doc["pairs"] = std::move(jp);
        return doc.dump(2) + "\n";
    }
    if (opt.format == Format::markdown) {
        auto idx = product_indices(g);
        std::string out = "### Samelson products in " + group_header(g) + "\n\n";
        // Symmetric verdict matrix from the upper triangle we computed.
        auto find = [&](std::size_t x, std::size_t y) -> const SamelsonVerdict& {
            if (x > y) std::swap(x, y);
            // Row x starts after sum_{r<x} (k - r) cells of the triangle.
            std::size_t k = idx.size();
            std::size_t off = x * k - x * (x + 1) / 2 + x;  // index of (x, x)
            return verdicts[off + (y - x)];
        };
        out += "|  |";
        for (const auto& b : idx) out += " " + b.label() + " |";
        out += "\n| --- |";
        for (std::size_t c = 0; c < idx.size(); ++c) out += " --- |";
        out += "\n";
        for (std::size_t x = 0; x < idx.size(); ++x) {
            out += "| " + idx[x].label() + " |";
            for (std::size_t y = 0; y < idx.size(); ++y) {
                const auto& v = find(x, y);
                Verdict shown = g.classical() ? v.p1 : v.closed_form;
                out += " " + cell_symbol(shown, v.edge) + " |";
            }
            out += "\n";
        }
        out += "\nx = nontrivial, - = trivial, ? = no verdict";
        out += g.classical() ? " (P^1 criterion shown)\n" : " (closed form shown; no generator model)\n";
        bool any = false;
        for (const auto& v : verdicts) {
            if (v.witnesses.empty() && !v.edge && (!v.agree || *v.agree)) continue;
            if (!any) {
                out += "\nDetails:\n";
                any = true;
            }
            out += "- " + pair_label(v) + ": p1 " + verdict_str(v.p1) + ", closed form " +
                   verdict_str(v.closed_form) + ", agree " + agree_str(v);
            for (const auto& w : v.witnesses)
                out += "; witness " + w.generator + " (coeff " + std::to_string(w.coeff.value()) + ")";
            out += "\n";
        }
        return out;
    }
    std::string out = group_header(g) + "\n";
    for (const auto& v : verdicts) {
        out += pair_label(v) + "  p1: " + verdict_str(v.p1) + "  closed_form: " +
               verdict_str(v.closed_form) + "  agree: " + agree_str(v);
        if (!v.witnesses.empty()) {
            out += "  witnesses:";
            for (const auto& w : v.witnesses)
                out += " " + w.generator + "(" + std::to_string(w.coeff.value()) + ")";
        }
        out += "\n";
    }
    return out;
}

json normality_json(const NormalityReport& r) {
    json doc;
    doc["n"] = r.n;
    doc["so_odd"] = 2 * r.n - 1;
    doc["so_even"] = 2 * r.n;
    doc["p"] = r.p;
    doc["normal"] = r.normal;
    if (r.witness_a) {
        json w;
        w["a"] = r.witness_a->label();
        w["b"] = r.witness_b->label();
        w["coefficient"] = r.coeff->value();
        doc["witness"] = std::move(w);
    }
    if (!r.note.empty()) doc["note"] = r.note;
    return doc;
}

std::string render_normality(const NormalityReport& r, const Options& opt) {
    if (opt.format == Format::json) return normality_json(r).dump(2) + "\n";
    std::string head = "SO(" + std::to_string(2 * r.n - 1) + ") in SO(" + std::to_string(2 * r.n) +
                       ") at p = " + std::to_string(r.p) + ": ";
    std::string body;
    if (r.normal) {
        body = "normal (p > 2n-1 = " + std::to_string(2 * r.n - 1) + ")";
    } else if (r.witness_a) {
        body = "not normal; <" + r.witness_a->label() + ", " + r.witness_b->label() +
               "> is nonzero (coefficient of e*p" + std::to_string(r.witness_a->i) +
               " in P1(e) is " + std::to_string(r.coeff->value()) + ")";
    } else {
        body = "not normal (" + r.note + ")";
    }
    if (opt.format == Format::markdown) return "- " + head + body + "\n";
    return head + body + "\n";
}

json mahowald_json(const MahowaldReport& r) {
    json doc;
    doc["n"] = r.n;
    doc["p"] = r.p;
    doc["factorial_arg"] = 2 * r.n - 1;
    doc["valuation"] = r.valuation;
    doc["theta_theta_nontrivial"] = r.theta_theta_nontrivial;
    doc["consistent"] = r.consistent;
    return doc;
}

std::string render_mahowald(const MahowaldReport& r, const Options& opt) {
    if (opt.format == Format::json) return mahowald_json(r).dump(2) + "\n";
    std::string line = "SO(" + std::to_string(2 * r.n) + ") at p = " + std::to_string(r.p) +
                       ": nu_p((2n-1)!) = " + std::to_string(r.valuation) + ", <theta, theta> " +
                       (r.theta_theta_nontrivial ? "nontrivial" : "trivial") + " => " +
                       (r.consistent ? "consistent" : "INCONSISTENT");
    if (opt.format == Format::markdown) return "- " + line + "\n";
    return line + "\n";
}

}  // namespace report
}  // namespace samelson
