#include "realdescent/report.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>

namespace realdescent {

std::string branch_name(Branch branch) {
    switch (branch) {
    case Branch::SelfConjugate:
        return "SelfConjugate";
    case Branch::GenericDescent:
        return "GenericDescent";
    }
    return "";
}

std::string w_kind_name(WKind kind) {
    switch (kind) {
    case WKind::Empty:
        return "Empty";
    case WKind::NonEmpty:
        return "NonEmpty";
    case WKind::NotComputed:
        return "NotComputed";
    }
    return "";
}

namespace {

const char* r_map_label(const DescentReport& report) {
    return report.r_is_isomorphism ? "isomorphism" : "birational";
}

long long to_microseconds(double ms) {
    return static_cast<long long>(std::llround(ms * 1000.0));
}

} // namespace

std::string render_text(const DescentReport& report,
                        const StageTimings* timings) {
    std::ostringstream out;
    out << "branch: " << branch_name(report.branch) << "\n";
    out << "field: " << report.field.to_string() << "\n";

    out << "\nZ generators (over Q):\n";
    if (report.z_generators.empty())
        out << "  0\n";
    for (const auto& g : report.z_generators)
        out << "  " << g.to_string() << "\n";

    if (report.branch == Branch::GenericDescent) {
        out << "\nR components:\n";
        for (const auto& c : report.r_components)
            out << "  " << c.to_string() << "\n";
    }

    out << "\nW locus: " << w_kind_name(report.w_status.kind) << "\n";
    for (const auto& g : report.w_status.generators)
        out << "  " << g.to_string() << "\n";
    out << "R map: " << r_map_label(report) << "\n";

    if (!report.certificates.empty()) {
        out << "\ncertificates:\n";
        for (const auto& c : report.certificates) {
            out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.pass && !c.witness.empty())
                out << ": " << c.witness;
            out << "\n";
        }
    }

    if (!report.notes.empty()) {
        out << "\nnotes:\n";
        for (const auto& n : report.notes)
            out << "  - " << n << "\n";
    }

    if (timings) {
        out << "\ntimings:\n";
        for (const auto& [stage, ms] : *timings)
            out << "  " << stage << ": " << to_microseconds(ms) << " us\n";
    }
    return out.str();
}

std::string render_json(const DescentReport& report,
                        const StageTimings* timings) {
    nlohmann::ordered_json j;
    j["branch"] = branch_name(report.branch);
    j["field"] = report.field.to_string();

    auto strings = [](const std::vector<Polynomial>& polys) {
        std::vector<std::string> out;
        out.reserve(polys.size());
        for (const auto& p : polys)
            out.push_back(p.to_string());
        return out;
    };
    j["z_generators"] = strings(report.z_generators);
    j["r_components"] = report.branch == Branch::GenericDescent
                            ? strings(report.r_components)
                            : std::vector<std::string>{};

    nlohmann::ordered_json w;
    w["kind"] = w_kind_name(report.w_status.kind);
    if (report.w_status.kind == WKind::NonEmpty)
        w["generators"] = strings(report.w_status.generators);
    w["r_map"] = r_map_label(report);
    j["w_status"] = std::move(w);

    nlohmann::ordered_json certs = nlohmann::ordered_json::object();
    for (const auto& c : report.certificates) {
        nlohmann::ordered_json entry;
        entry["pass"] = c.pass;
        if (!c.witness.empty())
            entry["witness"] = c.witness;
        certs[c.name] = std::move(entry);
    }
    j["certificates"] = std::move(certs);
    j["notes"] = report.notes;

    if (timings) {
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [stage, ms] : *timings)
            t[stage] = to_microseconds(ms);
        j["timings"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

} // namespace realdescent
