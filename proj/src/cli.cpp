#include "conicring/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conicring/error.hpp"
#include "conicring/gring.hpp"
#include "conicring/parse.hpp"

namespace conicring::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    Bounds bounds;
    bool json = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ConicProduct load_conics(const std::string& path, const Bounds& bounds) {
    try {
        return parse_conic_list(read_file(path), bounds);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json conic_json(const Conic& c) { return Json::array({c.a().get_str(), c.b().get_str()}); }

Json classes_json(const std::vector<BrauerClass>& classes) {
    Json arr = Json::array();
    for (const auto& c : classes) arr.push_back(c.to_string());
    return arr;
}

std::string class_list(const std::vector<BrauerClass>& classes) {
    std::string s = "[";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) s += ", ";
        s += classes[i].to_string();
    }
    return s + "]";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- classify ----------------------------------------------------------------

void cmd_classify(const std::string& path, const Options& opt, std::ostream& out) {
    const ConicProduct conics = load_conics(path, opt.bounds);
    Json report = Json::array();
    for (const auto& c : conics) {
        BrauerClass cls = brauer_class(c, opt.bounds);
        if (opt.json) {
            Json item{{"conic", conic_json(c)}, {"class", cls.to_string()}, {"split", cls.is_split()}};
            if (cls.is_split()) {
                Json point = Json::array();
                const ProjPoint witness = rational_point(c, opt.bounds);
                for (const auto& x : witness.coords()) point.push_back(x.to_string());
                item["point"] = point;
            }
            report.push_back(item);
            continue;
        }
        out << c.to_string() << ": class " << cls.to_string();
        if (cls.is_split()) {
            out << ", split, point " << rational_point(c, opt.bounds).to_string() << '\n';
        } else {
            out << ", non-split\n";
        }
    }
    if (opt.json) emit(out, Json{{"conics", report}});
}

// ---- product -----------------------------------------------------------------

void cmd_product(const std::string& path, const Options& opt, std::ostream& out) {
    const ConicProduct conics = load_conics(path, opt.bounds);
    const CanonicalForm form = canonical_of_product(conics, opt.bounds);
    std::vector<Conic> representatives;
    for (const auto& b : form.group.basis()) representatives.push_back(conic_from_class(b, opt.bounds));

    if (opt.json) {
        Json reps = Json::array();
        for (const auto& c : representatives) reps.push_back(conic_json(c));
        emit(out, Json{{"factors", conics.size()},
                       {"lefschetz_power", form.lefschetz_power},
                       {"dim", form.group.dim()},
                       {"basis", classes_json(form.group.basis())},
                       {"representatives", reps}});
        return;
    }
    if (form.group.is_trivial()) {
        out << "m=" << form.lefschetz_power << ", G=0\n";
        return;
    }
    out << "m=" << form.lefschetz_power << ", dim G=" << form.group.dim() << ", basis "
        << class_list(form.group.basis()) << '\n';
    out << "representatives [";
    for (std::size_t i = 0; i < representatives.size(); ++i) out << (i ? ", " : "") << representatives[i].to_string();
    out << "]\n";
}

// ---- equal / stably-birational -------------------------------------------------

std::string reason_text(const Decision& d) {
    switch (d.reason) {
        case Decision::Reason::None:
            return "";
        case Decision::Reason::SizeMismatch:
            return "reason=size-mismatch sizes=" + std::to_string(d.first_size) + "," + std::to_string(d.second_size);
        case Decision::Reason::WitnessInFirst:
            return "reason=witness class=" + d.witness->to_string() + " in=first";
        case Decision::Reason::WitnessInSecond:
            return "reason=witness class=" + d.witness->to_string() + " in=second";
    }
    return "";
}

Json decision_json(const Decision& d, const char* verdict) {
    Json j{{"verdict", verdict}, {"sizes", Json::array({d.first_size, d.second_size})}};
    switch (d.reason) {
        case Decision::Reason::None:
            j["reason"] = "none";
            break;
        case Decision::Reason::SizeMismatch:
            j["reason"] = "size-mismatch";
            break;
        case Decision::Reason::WitnessInFirst:
        case Decision::Reason::WitnessInSecond:
            j["reason"] = "witness";
            j["witness"] = d.witness->to_string();
            j["in"] = d.reason == Decision::Reason::WitnessInFirst ? "first" : "second";
            break;
    }
    return j;
}

void cmd_compare(const std::string& path_a, const std::string& path_b, bool stable, const Options& opt,
                 std::ostream& out) {
    const ConicProduct a = load_conics(path_a, opt.bounds);
    const ConicProduct b = load_conics(path_b, opt.bounds);
    const Decision d = stable ? decide_stably_birational(a, b, opt.bounds) : decide_equal_products(a, b, opt.bounds);
    const char* verdict = stable ? (d.holds ? "STABLY_BIRATIONAL" : "NOT_STABLY_BIRATIONAL")
                                 : (d.holds ? "EQUAL" : "NOT_EQUAL");
    if (opt.json) {
        emit(out, decision_json(d, verdict));
        return;
    }
    out << verdict;
    if (d.holds) {
        out << (stable ? " reason=same-span" : " reason=same-size-same-span");
    } else {
        out << ' ' << reason_text(d);
    }
    out << '\n';
}

// ---- reduce ----------------------------------------------------------------

void cmd_reduce(const std::string& path, const Options& opt, std::ostream& out) {
    const ConicProduct conics = load_conics(path, opt.bounds);
    const ProductReduction r = reduce_product(conics, opt.bounds);

    std::vector<BrauerClass> final_state = replay(r.classes, r.ops);
    std::vector<BrauerClass> expected = r.basis.basis();
    expected.resize(r.classes.size());
    if (final_state != expected) throw std::logic_error("reduce: transvection script does not replay to the basis");
    for (std::size_t i = 0; i < r.final_factors.size(); ++i) {
        if (brauer_class(r.final_factors[i], opt.bounds) != final_state[i])
            throw std::logic_error("reduce: rewritten conic disagrees with its class");
    }

    if (opt.json) {
        Json script = Json::array();
        for (std::size_t k = 0; k < r.ops.size(); ++k) {
            script.push_back(Json{{"target", r.ops[k].target},
                                  {"source", r.ops[k].source},
                                  {"conic", conic_json(r.rewritten[k])}});
        }
        Json finals = Json::array();
        for (const auto& c : r.final_factors) finals.push_back(conic_json(c));
        emit(out, Json{{"classes", classes_json(r.classes)},
                       {"script", script},
                       {"final", classes_json(final_state)},
                       {"final_conics", finals}});
        return;
    }
    out << "classes " << class_list(r.classes) << '\n';
    out << "script: " << r.ops.size() << (r.ops.size() == 1 ? " op" : " ops") << '\n';
    for (std::size_t k = 0; k < r.ops.size(); ++k) {
        const auto& op = r.ops[k];
        out << op.target << " += " << op.source << "    C_" << op.target << " <- C_" << op.source << " * C_"
            << op.target << " = " << r.rewritten[k].to_string() << '\n';
    }
    out << "final " << class_list(final_state) << '\n';
}

// ---- ring-eval ---------------------------------------------------------------

Rational json_rational(const Json& j) {
    std::optional<Rational> q;
    if (j.is_string()) q = Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) q = Rational(static_cast<long>(j.get<std::int64_t>()));
    if (!q) throw InputError("expected a rational, found " + j.dump());
    return *q;
}

RingElement ring_from_json(const Json& doc, const Bounds& bounds) {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        throw InputError("ring element document needs a \"terms\" array");
    RingElement total;
    for (const auto& t : doc["terms"]) {
        std::vector<BrauerClass> generators;
        for (const auto& g : t.value("generators", Json::array())) {
            if (!g.is_array() || g.size() != 2) throw InputError("generator must be a pair [a, b]");
            generators.push_back(brauer_class(new_conic(json_rational(g[0]), json_rational(g[1]), bounds), bounds));
        }
        for (const auto& c : t.value("basis", Json::array())) {
            auto cls = c.is_string() ? BrauerClass::parse(c.get<std::string>()) : std::nullopt;
            if (!cls) throw InputError("malformed class " + c.dump());
            generators.push_back(*cls);
        }
        const Json& m = t.value("lefschetz_power", Json(0));
        if (!m.is_number_unsigned() && !(m.is_number_integer() && m.get<std::int64_t>() >= 0))
            throw InputError("lefschetz_power must be a nonnegative integer");
        const Json& coeff = t.value("coefficient", Json("1"));
        Integer c;
        if (coeff.is_number_integer()) {
            c = static_cast<long>(coeff.get<std::int64_t>());
        } else if (!coeff.is_string() || c.set_str(coeff.get<std::string>(), 10) != 0) {
            throw InputError("coefficient must be an integer");
        }
        total += RingElement(Term{span(generators), m.get<unsigned>()}, c);
    }
    return total;
}

Json ring_to_json(const RingElement& x, const Bounds& bounds) {
    Json terms = Json::array();
    for (const auto& [t, c] : x.terms()) {
        Json generators = Json::array();
        for (const auto& b : t.group.basis()) generators.push_back(conic_json(conic_from_class(b, bounds)));
        terms.push_back(Json{{"basis", classes_json(t.group.basis())},
                             {"generators", generators},
                             {"lefschetz_power", t.lefschetz_power},
                             {"coefficient", c.get_str()}});
    }
    return Json{{"canonical", x.to_string()}, {"terms", terms}};
}

void cmd_ring_eval(const std::string& path, const Options& opt, std::ostream& out) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    RingElement value;
    try {
        if (first != std::string::npos && text[first] == '{') {
            Json doc;
            try {
                doc = Json::parse(text);
            } catch (const Json::parse_error& e) {
                throw InputError(std::string("malformed JSON: ") + e.what());
            }
            value = ring_from_json(doc, opt.bounds);
        } else {
            value = evaluate_ring_document(text, opt.bounds);
        }
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    if (opt.json) {
        emit(out, ring_to_json(value, opt.bounds));
    } else {
        out << value.to_string() << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in the Grothendieck ring of conics over Q", "conicring"};
    Options opt;
    app.add_option("--factor-bound", opt.bounds.factor, "Trial-division bound for factoring")
        ->check(CLI::Range(std::uint64_t{2}, (std::uint64_t{1} << 32) - 1))
        ->capture_default_str();
    app.add_option("--search-bound", opt.bounds.search, "Bound for discriminant, coefficient and point searches")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32))
        ->capture_default_str();
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.require_subcommand(1);

    std::string path_a;
    std::string path_b;
    auto* classify = app.add_subcommand("classify", "Classify each conic of a file by its Brauer class");
    classify->add_option("file", path_a, "Conic list")->required();
    auto* product = app.add_subcommand("product", "Canonical form of the product of the conics in a file");
    product->add_option("file", path_a, "Conic list")->required();
    auto* equal = app.add_subcommand("equal", "Decide equality of two products in the Grothendieck ring");
    equal->add_option("first", path_a, "Conic list")->required();
    equal->add_option("second", path_b, "Conic list")->required();
    auto* stable = app.add_subcommand("stably-birational", "Decide stable birationality of two products");
    stable->add_option("first", path_a, "Conic list")->required();
    stable->add_option("second", path_b, "Conic list")->required();
    auto* reduce = app.add_subcommand("reduce", "Transvection script reducing the classes to a canonical basis");
    reduce->add_option("file", path_a, "Conic list")->required();
    auto* ring_eval = app.add_subcommand("ring-eval", "Evaluate a ring expression document");
    ring_eval->add_option("file", path_a, "Expression or JSON document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformedInput;
    }

    // Reports are buffered so a failing run writes nothing to `out`.
    std::ostringstream report;
    try {
        if (classify->parsed()) cmd_classify(path_a, opt, report);
        else if (product->parsed()) cmd_product(path_a, opt, report);
        else if (equal->parsed()) cmd_compare(path_a, path_b, false, opt, report);
        else if (stable->parsed()) cmd_compare(path_a, path_b, true, opt, report);
        else if (reduce->parsed()) cmd_reduce(path_a, opt, report);
        else if (ring_eval->parsed()) cmd_ring_eval(path_a, opt, report);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformedInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceBound;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    out << report.str();
    return kExitOk;
}

}  // namespace conicring::cli
