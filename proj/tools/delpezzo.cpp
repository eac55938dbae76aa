// delpezzo.cpp -- command-line front end
//
// Subcommands:
//   validate   check a triplet document, JSON report on stdout
//   eliminate  resolve a triplet document, dump the resolution or its graph
//   enumerate  list all normalized types within bounds (JSON lines)
//   atlas      write one DOT file per tabulated dual-graph row
//   indices    the fractional-index value set up to a denominator cap
//
// Exit codes: 0 success, 1 domain failure, 2 input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "delpezzo/delpezzo.hpp"

namespace fs = std::filesystem;
using namespace delpezzo;

namespace {

int read_document(const std::string& path, json& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    try {
        in >> out;
    } catch (const json::exception& e) {
        std::cerr << "json parse error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cmd_validate(const std::string& path) {
    json j;
    if (int rc = read_document(path, j)) return rc;
    TripletConfig t;
    try {
        t = triplet_from_json(j);
    } catch (const DocumentError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        json rep;
        rep["valid"] = false;
        rep["structural_error"] = e.what();
        std::cout << rep.dump(2) << "\n";
        return 1;
    }
    ValidationReport rep = validate(t);
    json out = report_to_json(rep);
    if (rep.valid) {
        out["normalized"] = is_normalized(t);
        auto cls = classify_triplet(t);
        if (cls) {
            out["label"] = cls->label;
            if (cls->param_kind != 0)
                out["family_params"] = {{std::string(1, cls->param_kind), cls->param}};
        }
    }
    std::cout << out.dump(2) << "\n";
    return rep.valid ? 0 : 1;
}

int cmd_eliminate(const std::string& path, const std::string& graph_format,
                  const std::string& which) {
    json j;
    if (int rc = read_document(path, j)) return rc;
    TripletConfig t;
    try {
        t = triplet_from_json(j);
    } catch (const DocumentError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 1;
    }
    auto L = fundamental_divisor(t.index, t.config);
    if (!L) {
        std::cerr << "no integral fundamental divisor for this configuration\n";
        return 1;
    }
    auto res = eliminate(t.config, t.delta, Rational(t.index.s()), *L);
    if (!res.ok()) {
        const char* kind = "error";
        switch (res.error.kind) {
            case EliminationError::Kind::NegativeCoefficient: kind = "NegativeCoefficient"; break;
            case EliminationError::Kind::PointOffAllComponents: kind = "PointOffAllComponents"; break;
            case EliminationError::Kind::ContactExceedsDegree: kind = "ContactExceedsDegree"; break;
            case EliminationError::Kind::EmptySubscheme: kind = "EmptySubscheme"; break;
            default: break;
        }
        std::cerr << kind << ": " << res.error.detail << "\n";
        return 1;
    }
    const auto& model = *res.model;
    const auto sel = which == "full" ? GraphSelection::FullExceptional
                                     : GraphSelection::SupportOfE_M;
    DualGraph g = dual_graph_of(model, sel);
    if (graph_format == "dot") {
        std::cout << to_dot(g, "resolution");
        return 0;
    }
    json out;
    out["s"] = t.index.s();
    json Lj;
    if (L->surface.is_p2())
        Lj["line"] = L->c0.str();
    else {
        Lj["sigma"] = L->c0.str();
        Lj["fiber"] = L->c1.str();
    }
    out["fundamental_divisor"] = Lj;
    json curves = json::array();
    for (const auto& c : model.curves) {
        curves.push_back({{"curve", c.label},
                          {"self_int", c.self_int},
                          {"em_coeff", c.em_coeff.str()},
                          {"lm_intersection", c.lm_intersection.str()}});
    }
    out["curves"] = curves;
    json edges = json::array();
    for (auto [x, y] : model.edges)
        edges.push_back({model.curves[x].label, model.curves[y].label});
    out["adjacency"] = edges;
    json exc = json::array();
    for (int i : exceptional_curves(model)) exc.push_back(model.curves[i].label);
    out["exceptional_curves"] = exc;
    out["dual_graph"] = graph_to_json(g);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_enumerate(std::int64_t a_max, int n_max, const std::string& index_filter, bool no_prune,
                  int jobs) {
    std::optional<MultiIndex> only;
    if (!index_filter.empty()) {
        const auto slash = index_filter.find('/');
        if (slash == std::string::npos) {
            std::cerr << "--index expects a/b\n";
            return 2;
        }
        try {
            only = MultiIndex(std::stoll(index_filter.substr(0, slash)),
                              std::stoll(index_filter.substr(slash + 1)));
        } catch (const std::exception& e) {
            std::cerr << "--index: " << e.what() << "\n";
            return 2;
        }
    }
    SearchBounds bounds;
    try {
        bounds = SearchBounds(a_max, n_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    EnumOptions opt;
    opt.prune = !no_prune;
    opt.threads = jobs;
    auto records = enumerate_all(bounds, opt);
    bool all_classified = true;
    for (const auto& r : records) {
        if (only && !(r.index == *only)) continue;
        std::cout << record_to_json(r).dump() << "\n";
        all_classified = all_classified && r.classified;
    }
    if (!all_classified) {
        std::cerr << "unclassified triplets present\n";
        return 1;
    }
    return 0;
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

int cmd_atlas(int n_max, const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
        return 1;
    }
    int written = 0, row_no = 0;
    for (const auto& row : atlas_rows()) {
        row_no++;
        const TypeTemplate* tpl = template_by_label(row.labels.front());
        if (!tpl) {
            std::cerr << "missing template " << row.labels.front() << "\n";
            return 1;
        }
        TypeShape shape = tpl->shape(row.rep_param);
        const int n = shape.surface.is_p2() ? 0 : shape.surface.n;
        if (n > n_max || n_max < 0) continue;
        TripletConfig t = realize(shape);
        auto L = fundamental_divisor(t.index, t.config);
        auto res = eliminate(t.config, t.delta, Rational(t.index.s()), *L);
        if (!res.ok()) {
            std::cerr << "row " << row.labels.front() << " failed to resolve\n";
            return 1;
        }
        DualGraph g = dual_graph_of(*res.model, GraphSelection::SupportOfE_M);
        char prefix[32];
        std::snprintf(prefix, sizeof prefix, "table%d_row%02d_", row.table, row_no);
        const std::string fname = prefix + sanitize(row.labels.front()) + ".dot";
        std::ofstream out(fs::path(out_dir) / fname);
        out << to_dot(g, row.labels.front());
        std::cout << fname << "\n";
        written++;
    }
    std::cerr << "wrote " << written << " graphs to " << out_dir << "\n";
    return 0;
}

int cmd_indices(std::int64_t cap) {
    if (cap < 1) {
        std::cerr << "--denominator-cap must be positive\n";
        return 2;
    }
    for (const auto& r : fractional_index_set(cap)) std::cout << r.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of log del Pezzo surfaces of fractional index in [1/2, 1)"};
    app.require_subcommand(1);

    std::string path, graph_format = "json", which = "E", index_filter, out_dir = "atlas";
    std::int64_t a_max = 30, cap = 30;
    int n_max = 12, jobs = 0;
    bool no_prune = false;

    auto* v = app.add_subcommand("validate", "check a triplet document");
    v->add_option("file", path, "triplet document (JSON)")->required();

    auto* e = app.add_subcommand("eliminate", "resolve a triplet document");
    e->add_option("file", path, "triplet document (JSON)")->required();
    e->add_option("--graph", graph_format, "output format: dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    e->add_option("--which", which, "graph selection: E (support) or full")
        ->check(CLI::IsMember({"E", "full"}));

    auto* en = app.add_subcommand("enumerate", "list all normalized types within bounds");
    en->add_option("--a-max", a_max, "largest weight a");
    en->add_option("--n-max", n_max, "largest Hirzebruch degree");
    en->add_option("--index", index_filter, "restrict to one weight pair a/b");
    en->add_flag("--no-prune", no_prune, "search from definition-level constraints only");
    en->add_option("--jobs", jobs, "worker threads (DELPEZZO_THREADS caps)");

    auto* at = app.add_subcommand("atlas", "write the tabulated dual graphs as DOT files");
    at->add_option("--n-max", n_max, "largest Hirzebruch degree");
    at->add_option("--out", out_dir, "output directory");

    auto* in = app.add_subcommand("indices", "fractional-index values up to a denominator cap");
    in->add_option("--denominator-cap", cap, "largest reduced denominator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    if (v->parsed()) return cmd_validate(path);
    if (e->parsed()) return cmd_eliminate(path, graph_format, which);
    if (en->parsed()) return cmd_enumerate(a_max, n_max, index_filter, no_prune, jobs);
    if (at->parsed()) return cmd_atlas(n_max, out_dir);
    if (in->parsed()) return cmd_indices(cap);
    return 2;
}
