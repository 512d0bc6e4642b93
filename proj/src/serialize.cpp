#include "kappa/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace kappa {

namespace {

using json = nlohmann::ordered_json;

json config_json(const SmashConfig& cfg) {
    return json{{"basis", to_string(cfg.basis)},
                {"order", to_string(cfg.order)},
                {"metric", cfg.metric.flipped ? "flipped" : "default"},
                {"coproduct", cfg.variant == CoproductVariant::Transposed ? "transposed"
                                                                          : "direct"}};
}

struct NamedRelation {
    std::string lhs;
    const Element* rhs;
};

std::vector<NamedRelation> ordered_relations(const CommutatorSet& c) {
    std::vector<NamedRelation> out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            out.push_back({commutator_key('x', mu, 'x', nu), &c.xx[mu][nu]});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            out.push_back({commutator_key('x', mu, 'P', nu), &c.xp[mu][nu]});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            out.push_back({commutator_key('P', mu, 'P', nu), &c.pp[mu][nu]});
    return out;
}

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string table_to_json(const DerivedTable& t, bool include_provenance) {
    json doc;
    doc["config"] = config_json(t.config);
    json rels = json::array();
    for (const auto& nr : ordered_relations(t.comms)) {
        json rel{{"lhs", nr.lhs}, {"rhs", nr.rhs->to_string()}};
        auto ann = t.annotations.find(nr.lhs);
        if (ann != t.annotations.end()) rel["annotation"] = ann->second;
        if (include_provenance) {
            auto prov = t.provenance.find(nr.lhs);
            if (prov != t.provenance.end() && !prov->second.empty())
                rel["provenance"] = prov->second;
        }
        rels.push_back(std::move(rel));
    }
    doc["relations"] = std::move(rels);
    auto table_note = t.annotations.find("*");
    if (table_note != t.annotations.end()) doc["annotation"] = table_note->second;
    return doc.dump(2);
}

std::string diff_to_json(const DiffReport& r) {
    json doc;
    doc["fixture"] = r.fixture_id;
    doc["clean"] = r.clean;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json entry{{"lhs", e.lhs}, {"derived", e.derived}, {"expected", e.expected},
                   {"equal", e.equal}};
        if (!e.annotation.empty()) entry["annotation"] = e.annotation;
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

std::string limit_report_to_json(const ClassicalLimitReport& r) {
    json doc;
    doc["config"] = config_json(r.config);
    doc["canonical"] = r.canonical;
    doc["sign_flipped"] = r.sign_flipped;
    doc["convention"] = r.convention;
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"lhs", e.lhs}, {"limit", e.limit}, {"canonical", e.canonical_entry}});
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

std::string uncertainty_to_json(const UncertaintyReport& r) {
    json doc;
    doc["case"] = r.case_name;
    doc["hbar"] = r.hbar;
    doc["grid"] = json{{"n", r.grid.n}, {"extent", r.grid.extent}};
    doc["seed"] = r.seed;
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"case", row.case_name},
                            {"pair", row.pair_name},
                            {"kappa", row.kappa},
                            {"lhs", row.lhs},
                            {"rhs", row.rhs},
                            {"margin", row.margin},
                            {"pass", row.pass()},
                            {"state", row.state.to_string()}});
    }
    doc["rows"] = std::move(rows);
    doc["summary"] =
        json{{"checked", r.rows.size()}, {"violations", r.violations()}, {"min_margin", r.min_margin()}};
    return doc.dump(2);
}

std::string residuals_to_json(const std::string& case_name, double hbar, double kappa,
                              const std::vector<ResidualRow>& rows) {
    json doc;
    doc["case"] = case_name;
    doc["hbar"] = hbar;
    doc["kappa"] = kappa;
    json list = json::array();
    for (const auto& row : rows)
        list.push_back(json{{"relation", row.relation}, {"residual", row.residual}});
    doc["residuals"] = std::move(list);
    return doc.dump(2);
}

std::string uncertainty_to_csv(const UncertaintyReport& r) {
    std::string out = "case,pair,kappa,lhs,rhs,margin,state\n";
    for (const auto& row : r.rows) {
        out += row.case_name + "," + row.pair_name + "," + csv_double(row.kappa) + "," +
               csv_double(row.lhs) + "," + csv_double(row.rhs) + "," + csv_double(row.margin) +
               "," + row.state.to_string() + "\n";
    }
    return out;
}

std::string table_to_text(const DerivedTable& t) {
    std::ostringstream os;
    os << "table " << t.config.id() << "\n";
    for (const auto& nr : ordered_relations(t.comms)) {
        os << "  " << nr.lhs << " = " << nr.rhs->to_string();
        auto ann = t.annotations.find(nr.lhs);
        if (ann != t.annotations.end()) os << "   [note: " << ann->second << "]";
        os << "\n";
    }
    auto table_note = t.annotations.find("*");
    if (table_note != t.annotations.end()) os << "  note: " << table_note->second << "\n";
    return os.str();
}

std::string diff_to_text(const DiffReport& r) {
    std::ostringstream os;
    os << "verify against fixture " << r.fixture_id << ": " << (r.clean ? "clean" : "MISMATCH")
       << "\n";
    for (const auto& e : r.entries) {
        if (!e.equal)
            os << "  " << e.lhs << ": derived " << e.derived << "  !=  expected " << e.expected
               << "\n";
        else if (!e.annotation.empty())
            os << "  " << e.lhs << " = " << e.derived << "   [flag: " << e.annotation << "]\n";
    }
    return os.str();
}

std::string limit_report_to_text(const ClassicalLimitReport& r) {
    std::ostringstream os;
    os << "classical limit of " << r.config.id() << ": "
       << (r.canonical ? "canonical phase space"
                       : (r.sign_flipped ? "non-canonical (all signs flipped)" : "non-canonical"))
       << " [" << r.convention << "]\n";
    for (const auto& e : r.entries)
        if (e.limit != "0") os << "  " << e.lhs << " -> " << e.limit << "\n";
    return os.str();
}

std::string uncertainty_to_text(const UncertaintyReport& r) {
    std::ostringstream os;
    os << "uncertainty sweep, case " << r.case_name << ", hbar " << r.hbar << ", grid "
       << r.grid.n << "x" << r.grid.n << " over [-" << r.grid.extent << ", " << r.grid.extent
       << "]\n";
    os << "  states checked: " << r.rows.size() / 4 << ", inequalities: " << r.rows.size()
       << ", violations: " << r.violations() << ", min margin: " << r.min_margin() << "\n";
    for (const auto& row : r.rows) {
        if (!row.pass())
            os << "  VIOLATION " << row.pair_name << " kappa=" << row.kappa << " lhs=" << row.lhs
               << " rhs=" << row.rhs << " margin=" << row.margin << " state " << row.state.to_string()
               << "\n";
    }
    return os.str();
}

} // namespace kappa
