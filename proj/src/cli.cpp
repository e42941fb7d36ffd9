#include "dihedralk/cli.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihedralk/ahss.hpp"
#include "dihedralk/kring.hpp"
#include "dihedralk/polyzoo.hpp"
#include "dihedralk/sweep.hpp"

namespace dk::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json coeffs_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::vector<BigInt> coeffs_from_json(const json& a) {
    std::vector<BigInt> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
}

// ---- verify -----------------------------------------------------------

json verify_doc(const std::vector<long>& ns, bool swap_eta, int jobs) {
    auto reports = sweep_parallel<VerifyReport>(
        ns, [swap_eta](long n) { return verify_presentation(n, swap_eta); }, jobs);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["params"] = {{"swap_eta", swap_eta}};
    doc["params"]["ns"] = ns;
    json results = json::array();
    for (const auto& rep : reports) {
        auto emit = [&](const std::vector<RelationAudit>& items, bool swapped) {
            for (const auto& a : items) {
                json r;
                r["n"] = rep.n;
                r["item"] = swapped ? a.label + " [swapped]" : a.label;
                r["status"] = a.ok ? "ok" : "defect";
                if (!a.ok) {
                    r["defect"] = coeffs_json(a.defect);
                    r["basis"] = DihedralRing(rep.n).basis();
                }
                results.push_back(std::move(r));
            }
        };
        emit(rep.items, false);
        if (rep.retried) emit(*rep.retried, true);
    }
    doc["results"] = std::move(results);
    return doc;
}

std::string verify_text(const json& doc) {
    std::ostringstream os;
    std::map<long, DihedralRing> rings;
    for (const auto& r : doc["results"]) {
        long n = r["n"].get<long>();
        os << "n=" << n << " " << r["item"].get<std::string>() << ": ";
        if (r["status"] == "ok") {
            os << "0";
        } else {
            auto it = rings.find(n);
            if (it == rings.end()) it = rings.emplace(n, DihedralRing(n)).first;
            os << it->second.describe(coeffs_from_json(r["defect"]));
        }
        os << "\n";
    }
    return os.str();
}

// ---- table ------------------------------------------------------------

json table_doc(long n, long pmax) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "table";
    doc["params"] = {{"n", n}, {"pmax", pmax}};
    json results = json::array();
    for (long p = 0; p <= pmax; ++p)
        results.push_back({{"p", p}, {"group", cohomology(n, p).str()}});
    doc["results"] = std::move(results);
    return doc;
}

std::string table_text(const json& doc, bool csv) {
    std::ostringstream os;
    if (csv) os << "p,group\n";
    for (const auto& r : doc["results"])
        os << r["p"].get<long>() << (csv ? "," : " ") << r["group"].get<std::string>() << "\n";
    return os.str();
}

// ---- restrict ---------------------------------------------------------

json restrict_doc(long n, const std::string& elem, const std::string& target, bool swap_eta) {
    std::vector<BigInt> image;
    if (target == "zn") {
        image = restriction_image(n, elem).c;
    } else {
        DihedralRing ring(n, swap_eta);
        RepVec a = (elem == "phi") ? ring.phi() : ring.v_elt(elem);
        image = ring.restrict_to(a, target == "z2s" ? RestrictTarget::ReflectionS
                                                    : RestrictTarget::ReflectionRS);
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "restrict";
    doc["params"] = {{"n", n}, {"elem", elem}, {"target", target}, {"swap_eta", swap_eta}};
    doc["results"] = json::array();
    doc["results"].push_back({{"n", n}, {"item", elem + "->" + target}, {"status", "ok"},
                              {"image", coeffs_json(image)}});
    return doc;
}

std::string restrict_text(const json& doc) {
    auto image = coeffs_from_json(doc["results"][0]["image"]);
    bool zero = true;
    for (const auto& x : image)
        if (x != 0) zero = false;
    if (zero) return "0\n";
    std::ostringstream os;
    for (size_t i = 0; i < image.size(); ++i) os << (i ? " " : "") << image[i].str();
    os << "\n";
    return os.str();
}

// ---- audit ------------------------------------------------------------

json audit_doc(long n, long depth) {
    FiltrationAudit audit = audit_filtrations(n, depth);
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "audit";
    doc["params"] = {{"n", n}, {"depth", depth}};
    json results = json::array();
    for (const auto& row : audit.rows) {
        json r;
        r["degree"] = row.degree;
        r["gr_order"] = row.gr_order.str();
        if (row.expected_order) {
            r["expected"] = row.expected_order->str();
            r["expected_desc"] = row.expected_desc;
            r["status"] = row.match ? "match" : "mismatch";
        } else {
            r["status"] = "unverified";
        }
        results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    doc["pass"] = audit.pass;
    return doc;
}

std::string audit_text(const json& doc) {
    std::ostringstream os;
    for (const auto& r : doc["results"]) {
        os << "degree " << r["degree"].get<long>() << ": |gr|=" << r["gr_order"].get<std::string>();
        if (r["status"] == "unverified")
            os << " expected=unknown unverified";
        else
            os << " expected=" << r["expected"].get<std::string>() << " ("
               << r["expected_desc"].get<std::string>() << ") " << r["status"].get<std::string>();
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_text(const std::string& json_doc) {
    json doc = json::parse(json_doc);
    if (!doc.contains("command")) {  // poly emits a bare {"coeffs": [...]}
        std::ostringstream os;
        const auto& c = doc.at("coeffs");
        for (size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j].get<std::string>();
        os << "\n";
        return os.str();
    }
    std::string cmd = doc["command"].get<std::string>();
    if (cmd == "verify") return verify_text(doc);
    if (cmd == "table") return table_text(doc, false);
    if (cmd == "restrict") return restrict_text(doc);
    if (cmd == "audit") return audit_text(doc);
    throw std::invalid_argument("render_text: unknown command " + cmd);
}

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact dihedral representation ring and K-ring calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    std::ostringstream out;
    int exit_code = 0;
    bool as_json = false, swap_eta = false;
    int jobs = 0;
    app.add_flag("--json", as_json, "emit a JSON document");
    app.add_flag("--swap-eta", swap_eta, "swap the eta1/eta2 labeling");
    app.add_option("--jobs", jobs, "worker threads for sweeps (0 = default)");

    // verify
    auto* verify = app.add_subcommand("verify", "lift presentation relations and report defects");
    long vn = 0, vfrom = 0, vto = 0;
    bool only_odd = false, only_even = false;
    verify->add_option("n", vn, "single group parameter");
    verify->add_option("--from", vfrom);
    verify->add_option("--to", vto);
    verify->add_flag("--odd", only_odd);
    verify->add_flag("--even", only_even);

    // poly
    auto* poly = app.add_subcommand("poly", "print a named polynomial, coefficients ascending");
    std::string family;
    long pidx = 0;
    poly->add_option("family", family, "psi | fmin | g | cheb")->required();
    poly->add_option("index", pidx)->required();

    // table
    auto* table = app.add_subcommand("table", "integral cohomology of the classifying space");
    std::string table_kind;
    long tn = 0, pmax = 0;
    bool as_csv = false;
    table->add_option("kind", table_kind, "cohomology")->required();
    table->add_option("--n", tn)->required();
    table->add_option("--pmax", pmax)->required();
    table->add_flag("--csv", as_csv);

    // restrict
    auto* restr = app.add_subcommand("restrict", "image under restriction to a subgroup");
    long rn = 0;
    std::string elem, target;
    restr->add_option("--n", rn)->required();
    restr->add_option("--elem", elem, "v | v1 | v2 | v3 | phi")->required();
    restr->add_option("--target", target, "zn | z2s | z2rs")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "filtration tower vs cohomology orders");
    long an = 0, depth = 0;
    audit->add_option("--n", an)->required();
    audit->add_option("--depth", depth)->required();

    std::vector<const char*> argv;
    argv.push_back("dkring");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        return {0, help.str()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string(e.what()) + "\n"};
    }

    try {
        if (*verify) {
            std::vector<long> ns;
            if (verify->count("n")) {
                ns.push_back(vn);
            } else if (verify->count("--from") && verify->count("--to")) {
                for (long n = vfrom; n <= vto; ++n) {
                    if (n < 3) continue;
                    if (only_odd && n % 2 == 0) continue;
                    if (only_even && n % 2 == 1) continue;
                    ns.push_back(n);
                }
            }
            if (ns.empty()) return {2, "verify: give n or a --from/--to range\n"};
            json doc = verify_doc(ns, swap_eta, jobs);
            out << (as_json ? doc.dump(2) + "\n" : verify_text(doc));
            for (const auto& r : doc["results"])
                if (r["status"] == "defect") exit_code = 1;
        } else if (*poly) {
            IntPoly p;
            if (family == "psi") p = adams_psi(pidx);
            else if (family == "cheb") p = shifted_chebyshev(pidx);
            else if (family == "g") p = g_poly(pidx);
            else if (family == "fmin") p = f_min(pidx);
            else return {2, "poly: unknown family " + family + "\n"};
            if (as_json) {
                json doc;
                doc["coeffs"] = json::array();
                for (long j = 0; j <= p.degree(); ++j) doc["coeffs"].push_back(p.coeff(j).str());
                out << doc.dump(2) << "\n";
            } else {
                if (p.is_zero()) out << "0";
                for (long j = 0; j <= p.degree(); ++j) out << (j ? " " : "") << p.coeff(j).str();
                out << "\n";
            }
        } else if (*table) {
            if (table_kind != "cohomology") return {2, "table: unknown kind " + table_kind + "\n"};
            json doc = table_doc(tn, pmax);
            out << (as_json ? doc.dump(2) + "\n" : table_text(doc, as_csv));
        } else if (*restr) {
            json doc = restrict_doc(rn, elem, target, swap_eta);
            out << (as_json ? doc.dump(2) + "\n" : restrict_text(doc));
        } else if (*audit) {
            if (depth < 1) return {2, "audit: need --depth >= 1\n"};
            json doc = audit_doc(an, depth);
            out << (as_json ? doc.dump(2) + "\n" : audit_text(doc));
            if (!doc["pass"].get<bool>()) exit_code = 1;
        }
    } catch (const std::length_error& e) {
        return {2, std::string(e.what()) + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, std::string(e.what()) + "\n"};
    }
    return {exit_code, out.str()};
}

}  // namespace dk::cli
