#include "prelie/cli.hpp"

#include "prelie/cohomology.hpp"
#include "prelie/document.hpp"
#include "prelie/errors.hpp"
#include "prelie/fixtures.hpp"
#include "prelie/nijenhuis.hpp"
#include "prelie/operators.hpp"
#include "prelie/paracomplex.hpp"
#include "prelie/search.hpp"
#include "prelie/smatrix.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <regex>

namespace prelie {

namespace {

using nlohmann::json;

struct Record {
    std::string check;
    bool result = false;
    std::string witness;
    std::string ref;
};

class Reporter {
public:
    Reporter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

    void add(Record rec) {
        all_pass_ = all_pass_ && rec.result;
        if (json_) {
            json j{{"check", rec.check}, {"result", rec.result}};
            if (!rec.witness.empty()) j["witness"] = rec.witness;
            if (!rec.ref.empty()) j["ref"] = rec.ref;
            records_.push_back(std::move(j));
        } else {
            out_ << (rec.result ? "[PASS] " : "[FAIL] ") << rec.check;
            if (!rec.ref.empty()) out_ << " (" << rec.ref << ")";
            if (!rec.witness.empty()) out_ << ": " << rec.witness;
            out_ << "\n";
        }
    }

    int finish() {
        if (json_) out_ << records_.dump(2) << "\n";
        return all_pass_ ? 0 : 1;
    }

private:
    std::ostream& out_;
    bool json_;
    bool all_pass_ = true;
    json records_ = json::array();
};

template <typename T>
const T& named(const std::map<std::string, T>& table, const std::string& name,
               const std::string& what) {
    auto it = table.find(name);
    if (it == table.end()) throw input_error("no " + what + " named '" + name + "' in the file");
    return it->second;
}

std::vector<Rational> parse_grid(const std::string& spec, const std::string& denominators) {
    static const std::regex range(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(spec, m, range))
        throw input_error("grid must look like '<lo>..<hi>', got '" + spec + "'");
    const long lo = std::stol(m[1]), hi = std::stol(m[2]);
    std::vector<long> dens;
    if (denominators.empty()) {
        dens.push_back(1);
    } else {
        std::stringstream ss(denominators);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) dens.push_back(std::stol(item));
        if (dens.empty()) throw input_error("empty denominator list");
    }
    return grid_values(lo, hi, dens);
}

int cmd_check(const Document& doc, CLI::App* cmd, Reporter& rep) {
    const Algebra& a = doc.algebra;

    const bool all = cmd->count("--all") > 0;
    if (all || cmd->count("--pre-lie"))
        rep.add({"pre-lie", check_pre_lie(a).ok, check_pre_lie(a).witness, ""});
    if (cmd->count("--lie")) {
        const auto r = check_lie(a);
        rep.add({"lie", r.ok, r.witness, ""});
    }
    if (cmd->count("--assoc")) {
        const auto r = check_associative(a);
        rep.add({"associative", r.ok, r.witness, ""});
    }
    if (all && a.kind() != AlgebraKind::pre_lie && a.kind() != AlgebraKind::unchecked) {
        const auto r = verify_kind(a);
        rep.add({"kind:" + kind_name(a.kind()), r.ok, r.witness, ""});
    }

    for (const std::string& name : cmd->get_option("--nijenhuis")->results()) {
        const auto r = is_nijenhuis(a, named(doc.operators, name, "operator"));
        rep.add({"nijenhuis:" + name, r.ok, r.witness, ""});
    }
    if (cmd->count("--rota-baxter")) {
        Rational weight(0);
        if (cmd->count("--weight"))
            weight = parse_rational(cmd->get_option("--weight")->as<std::string>());
        for (const std::string& name : cmd->get_option("--rota-baxter")->results()) {
            const auto r = is_rota_baxter(a, named(doc.operators, name, "operator"), weight);
            rep.add({"rota-baxter(" + to_string(weight) + "):" + name, r.ok, r.witness, ""});
        }
    }
    if (cmd->count("--o-operator")) {
        if (!cmd->count("--rep"))
            throw input_error("--o-operator needs --rep <name>");
        const std::string rep_name = cmd->get_option("--rep")->as<std::string>();
        const Representation& rp =
            rep_name == "regular"
                ? regular_representation(a)
                : rep_name == "dual" ? dual_regular_representation(a)
                                     : named(doc.representations, rep_name, "representation");
        for (const std::string& name : cmd->get_option("--o-operator")->results()) {
            const auto r = is_o_operator(a, rp, named(doc.operators, name, "operator"));
            rep.add({"o-operator:" + name + "@" + rep_name, r.ok, r.witness, ""});
        }
    } else if (cmd->count("--rep") || all) {
        // Bare representation checks.
        if (cmd->count("--rep")) {
            const std::string name = cmd->get_option("--rep")->as<std::string>();
            const auto r = check_representation(a, named(doc.representations, name, "representation"));
            rep.add({"representation:" + name, r.ok, r.witness, ""});
        } else {
            for (const auto& [name, rp] : doc.representations) {
                const auto r = check_representation(a, rp);
                rep.add({"representation:" + name, r.ok, r.witness, ""});
            }
        }
    }
    for (const std::string& name : cmd->get_option("--s-matrix")->results()) {
        const auto r = is_s_matrix(a, named(doc.tensors, name, "tensor"));
        rep.add({"s-matrix:" + name, r.ok, r.witness, ""});
    }
    for (const std::string& name : cmd->get_option("--hessian")->results()) {
        const auto r = is_pseudo_hessian(a, named(doc.forms, name, "form"));
        rep.add({"pseudo-hessian:" + name, r.ok, r.witness, ""});
    }
    if (cmd->count("--phn")) {
        const auto names = cmd->get_option("--phn")->results();
        const auto r = is_pseudo_hessian_nijenhuis(a, named(doc.forms, names[0], "form"),
                                                   named(doc.operators, names[1], "operator"));
        rep.add({"phn:" + names[0] + "," + names[1], r.ok, r.witness, ""});
    }
    for (const std::string& name : cmd->get_option("--paracomplex")->results()) {
        const auto r = is_paracomplex(a, named(doc.operators, name, "operator"));
        rep.add({"paracomplex:" + name, r.verdict.ok, r.verdict.witness, ""});
    }
    for (const std::string& name : cmd->get_option("--quadratic")->results()) {
        const auto r = is_quadratic(a, named(doc.forms, name, "form"));
        rep.add({"quadratic:" + name, r.ok, r.witness, ""});
    }
    if (cmd->count("--para-kahler")) {
        const auto names = cmd->get_option("--para-kahler")->results();
        const auto r = is_para_kahler(a, named(doc.forms, names[0], "form"),
                                      named(doc.operators, names[1], "operator"));
        rep.add({"para-kahler:" + names[0] + "," + names[1], r.ok, r.witness, ""});
    }
    return rep.finish();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of operator structures on pre-Lie algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // check
    auto* check = app.add_subcommand("check", "Run checks against a document");
    std::string check_file;
    check->add_option("file", check_file, "Input document")->required();
    check->add_flag("--pre-lie", "Associator symmetry");
    check->add_flag("--lie", "Skew product and Jacobi");
    check->add_flag("--assoc", "Associativity");
    check->add_flag("--all", "Kind, plus every representation in the file");
    check->add_option("--nijenhuis", "Torsion of the named operator vanishes")->take_all();
    check->add_option("--rota-baxter", "Rota-Baxter identity for the named operator")->take_all();
    check->add_option("--weight", "Rota-Baxter weight (rational)");
    check->add_option("--o-operator", "O-operator identity for the named map")->take_all();
    check->add_option("--rep", "Representation name ('regular' and 'dual' are built in)");
    check->add_option("--s-matrix", "Self-bracket of the named tensor vanishes")->take_all();
    check->add_option("--hessian", "Named form is a pseudo-Hessian structure")->take_all();
    check->add_option("--phn", "Form and operator give a pseudo-Hessian-Nijenhuis pair")
        ->expected(2);
    check->add_option("--paracomplex", "Named operator is a para-complex structure")->take_all();
    check->add_option("--quadratic", "Named skew form is invariant")->take_all();
    check->add_option("--para-kahler", "Form and operator give a para-Kahler structure")
        ->expected(2);

    // deform
    auto* deform = app.add_subcommand("deform", "Deform the product by a Nijenhuis operator");
    std::string deform_file, deform_op, deform_out;
    std::string deform_t;
    deform->add_option("file", deform_file)->required();
    deform->add_option("--nijenhuis", deform_op, "Operator name")->required();
    deform->add_option("--t", deform_t, "Emit pi + t * deformed instead of the deformed product");
    deform->add_option("-o,--output", deform_out, "Write the result to a file");

    // search
    auto* search = app.add_subcommand("search", "Grid-search operators with a given property");
    std::string search_file, target, grid = "-2..2", denominators;
    std::string search_weight = "0";
    search->add_option("file", search_file)->required();
    search->add_option("--target", target, "nijenhuis | rota-baxter | s-matrix")
        ->required()
        ->check(CLI::IsMember({"nijenhuis", "rota-baxter", "s-matrix"}));
    search->add_option("--grid", grid, "Integer range lo..hi of candidate entries");
    search->add_option("--denominators", denominators, "Comma-separated denominators");
    search->add_option("--weight", search_weight, "Rota-Baxter weight");

    // fixtures
    auto* fix = app.add_subcommand("fixtures", "Run the built-in corpus of worked examples");

    try {
        std::vector<const char*> argv;
        argv.push_back("prelie");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's machinery.
            std::ostringstream os;
            app.exit(e, os, os);
            out << os.str();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool as_json = format == "json";
    try {
        if (check->parsed()) {
            Reporter rep(out, as_json);
            return cmd_check(load_document(check_file), check, rep);
        }
        if (deform->parsed()) {
            Document doc = load_document(deform_file);
            const Matrix& op = named(doc.operators, deform_op, "operator");
            if (auto r = is_nijenhuis(doc.algebra, op); !r) {
                err << "operator '" << deform_op << "' is not Nijenhuis: " << r.witness << "\n";
                return 1;
            }
            Cochain prod = deformed_product(doc.algebra, op);
            if (!deform_t.empty()) prod = doc.algebra.product() + parse_rational(deform_t) * prod;
            Document result;
            result.algebra = Algebra(prod, AlgebraKind::pre_lie, doc.algebra.basis());
            if (deform_out.empty())
                out << serialize_document(result);
            else
                save_document(result, deform_out);
            return 0;
        }
        if (search->parsed()) {
            const Document doc = load_document(search_file);
            const auto values = parse_grid(grid, denominators);
            GridSearchResult result;
            if (target == "nijenhuis")
                result = search_nijenhuis(doc.algebra, values);
            else if (target == "rota-baxter")
                result = search_rota_baxter(doc.algebra, parse_rational(search_weight), values);
            else
                result = search_smatrix(doc.algebra, values);
            if (as_json) {
                json j{{"target", target},
                       {"candidates", result.candidates},
                       {"hits", json::array()}};
                for (const auto& m : result.hits) {
                    json rows = json::array();
                    for (std::size_t i = 0; i < m.rows(); ++i) {
                        json row = json::array();
                        for (std::size_t k = 0; k < m.cols(); ++k)
                            row.push_back(to_string(m.at(i, k)));
                        rows.push_back(std::move(row));
                    }
                    j["hits"].push_back(std::move(rows));
                }
                out << j.dump(2) << "\n";
            } else {
                out << "searched " << result.candidates << " candidates, found "
                    << result.hits.size() << "\n";
                for (const auto& m : result.hits) out << "  " << m.str() << "\n";
            }
            return result.hits.empty() ? 1 : 0;
        }
        if (fix->parsed()) {
            Reporter rep(out, as_json);
            for (const auto& check_result : fixtures::run_all())
                rep.add({check_result.fixture + "/" + check_result.check, check_result.pass,
                         check_result.detail, check_result.ref});
            return rep.finish();
        }
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace prelie
