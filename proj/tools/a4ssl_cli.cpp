// Batch command-line interface. Links the shared C API only.
//
// Exit codes: 0 success, 2 usage error, 3 verification mismatch,
// 4 budget exceeded, 1 internal error.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "a4ssl.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 1;

struct Output {
    std::string format = "text";  // text | csv | json
    std::string path;             // empty = stdout

    void emit(const std::string& text_body, const std::string& csv_body, json json_body) const {
        std::string body;
        if (format == "json") {
            json_body["schema_version"] = 1;
            body = json_body.dump(2) + "\n";
        } else if (format == "csv") {
            body = csv_body;
        } else {
            body = text_body;
        }
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output file: " << path << "\n";
                std::exit(kExitUsage);
            }
            out << body;
        }
    }
};

int status_exit(int status) {
    switch (status) {
        case A4SSL_OK: return 0;
        case A4SSL_ERR_INVALID_ARGUMENT: return kExitUsage;
        case A4SSL_ERR_BUDGET_EXCEEDED: return kExitBudget;
        case A4SSL_ERR_MISMATCH: return kExitMismatch;
        default: return kExitInternal;
    }
}

[[noreturn]] void die(int status) {
    std::cerr << "error: " << a4ssl_status_name(status) << ": " << a4ssl_last_error() << "\n";
    std::exit(status_exit(status));
}

json quat_json(const a4ssl_quat& q) {
    json arr = json::array();
    for (int idx = 0; idx < 4; ++idx)
        arr.push_back({q.c[idx].a, q.c[idx].b, q.c[idx].den});
    return arr;
}

std::string quat_text(const a4ssl_quat& q) {
    std::ostringstream os;
    os << "(";
    for (int idx = 0; idx < 4; ++idx) {
        const auto& c = q.c[idx];
        os << c.a;
        if (c.b != 0) os << (c.b > 0 ? "+" : "") << c.b << "t";
        if (c.den != 1) os << "/" << c.den;
        os << (idx < 3 ? ", " : ")");
    }
    return os.str();
}

int cmd_count(uint64_t max_m, bool nonzero_only, const Output& out) {
    a4ssl_table* table = nullptr;
    int status = a4ssl_count_table(max_m, nonzero_only ? 1 : 0, &table);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    json rows = json::array();
    csv << "m,m_squared,f,f_pr\n";
    text << "  m      m^2        f     f_pr\n";
    for (uint64_t r = 0; r < a4ssl_table_rows(table); ++r) {
        a4ssl_count_row row{};
        a4ssl_table_row(table, r, &row);
        csv << row.m << "," << row.m_squared << "," << row.f << "," << row.f_pr << "\n";
        char line[96];
        std::snprintf(line, sizeof(line), "%3llu %8llu %8lld %8lld\n",
                      static_cast<unsigned long long>(row.m),
                      static_cast<unsigned long long>(row.m_squared),
                      static_cast<long long>(row.f), static_cast<long long>(row.f_pr));
        text << line;
        rows.push_back({{"m", row.m}, {"m_squared", row.m_squared}, {"f", row.f},
                        {"f_pr", row.f_pr}});
    }
    a4ssl_table_free(table);
    out.emit(text.str(), csv.str(), json{{"command", "count"}, {"rows", rows}});
    return 0;
}

int cmd_enumerate(uint64_t m, bool primitive, uint64_t budget, const Output& out) {
    a4ssl_ssl_list* list = nullptr;
    int status = a4ssl_enumerate(m, primitive ? 1 : 0, budget, &list);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    json records = json::array();
    csv << "m,index,scale,hnf\n";
    text << "count: " << a4ssl_ssl_list_size(list) << "\n";
    for (uint64_t idx = 0; idx < a4ssl_ssl_list_size(list); ++idx) {
        a4ssl_ssl_record rec{};
        a4ssl_ssl_list_get(list, idx, &rec);
        json hnf = json::array();
        std::ostringstream hnf_flat;
        for (int r = 0; r < 4; ++r) {
            json row = json::array();
            for (int c = 0; c < 4; ++c) {
                row.push_back(rec.hnf[r][c]);
                hnf_flat << rec.hnf[r][c] << (r == 3 && c == 3 ? "" : " ");
            }
            hnf.push_back(row);
        }
        json gen;
        if (rec.has_generator) {
            gen = json::array();
            for (int idx2 = 0; idx2 < 8; ++idx2) gen.push_back(rec.generator[idx2]);
        } else {
            gen = nullptr;
        }
        records.push_back({{"m", rec.m}, {"index", rec.index}, {"scale", rec.scale},
                           {"generator", gen}, {"hnf", hnf}});
        csv << rec.m << "," << rec.index << "," << rec.scale << ",\"" << hnf_flat.str()
            << "\"\n";
        text << "record " << idx << ": scale " << rec.scale << ", hnf [" << hnf_flat.str()
             << "]\n";
    }
    a4ssl_ssl_list_free(list);
    out.emit(text.str(), csv.str(),
             json{{"command", "enumerate"}, {"m", m}, {"primitive", primitive},
                  {"count", records.size()}, {"records", records}});
    return 0;
}

int cmd_verify_m(uint64_t m, const Output& out) {
    a4ssl_verify_report rep{};
    int status = a4ssl_verify_index(m, 1, &rep);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    text << "m = " << m << "\n";
    text << "  closed form:  f = " << rep.f_closed << ", f_pr = " << rep.fpr_closed << "\n";
    text << "  construction: f = " << rep.f_enumerated << ", f_pr = " << rep.fpr_enumerated
         << "\n";
    if (rep.oracle_ran)
        text << "  oracle:       f = " << rep.f_oracle << ", f_pr = " << rep.fpr_oracle << "\n";
    else
        text << "  oracle:       skipped (budget)\n";
    text << (rep.pass ? "PASS" : "FAIL") << (rep.oracle_ran ? "" : " (with note)") << "\n";
    csv << "m,f_closed,fpr_closed,f_enum,fpr_enum,oracle_ran,f_oracle,fpr_oracle,pass\n"
        << m << "," << rep.f_closed << "," << rep.fpr_closed << "," << rep.f_enumerated << ","
        << rep.fpr_enumerated << "," << rep.oracle_ran << "," << rep.f_oracle << ","
        << rep.fpr_oracle << "," << rep.pass << "\n";
    json body{{"command", "verify"},      {"m", m},
              {"f_closed", rep.f_closed}, {"fpr_closed", rep.fpr_closed},
              {"f_enumerated", rep.f_enumerated}, {"fpr_enumerated", rep.fpr_enumerated},
              {"oracle_ran", rep.oracle_ran != 0}, {"pass", rep.pass != 0}};
    if (rep.oracle_ran) {
        body["f_oracle"] = rep.f_oracle;
        body["fpr_oracle"] = rep.fpr_oracle;
    }
    out.emit(text.str(), csv.str(), body);
    return rep.pass ? 0 : kExitMismatch;
}

int cmd_verify_matrix(const std::string& file, uint64_t m, bool claim_primitive,
                      const Output& out) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot read matrix file: " << file << "\n";
        return kExitUsage;
    }
    int64_t entries[16];
    for (int idx = 0; idx < 16; ++idx) {
        if (!(in >> entries[idx])) {
            std::cerr << "matrix file must contain 16 integers (4 lines of 4)\n";
            return kExitUsage;
        }
    }
    int ok = 0, primitive = 0;
    char reason[64];
    int status = a4ssl_verify_matrix(entries, m, claim_primitive ? 1 : 0, &ok, &primitive,
                                     reason);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text;
    text << (ok ? "PASS" : "FAIL") << ": " << reason << " (primitive: " << (primitive ? "yes" : "no")
         << ")\n";
    out.emit(text.str(), text.str(),
             json{{"command", "verify-matrix"}, {"ok", ok != 0},
                  {"primitive", primitive != 0}, {"reason", reason}});
    return ok ? 0 : kExitMismatch;
}

int cmd_roots(const std::string& system, const Output& out) {
    a4ssl_roots* roots = nullptr;
    int status = a4ssl_roots_create(system.c_str(), &roots);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    json arr = json::array();
    text << system << ": " << a4ssl_roots_size(roots) << " roots\n";
    csv << "x0_a,x0_b,x0_den,x1_a,x1_b,x1_den,x2_a,x2_b,x2_den,x3_a,x3_b,x3_den\n";
    for (uint64_t idx = 0; idx < a4ssl_roots_size(roots); ++idx) {
        a4ssl_quat q{};
        a4ssl_roots_get(roots, idx, &q);
        arr.push_back(quat_json(q));
        text << "  " << quat_text(q) << "\n";
        for (int c = 0; c < 4; ++c)
            csv << q.c[c].a << "," << q.c[c].b << "," << q.c[c].den << (c < 3 ? "," : "\n");
    }
    uint64_t count = a4ssl_roots_size(roots);
    a4ssl_roots_free(roots);
    out.emit(text.str(), csv.str(),
             json{{"command", "roots"}, {"system", system}, {"count", count}, {"roots", arr}});
    return 0;
}

int cmd_twists(const Output& out) {
    a4ssl_twists* tw = nullptr;
    int status = a4ssl_twists_create(&tw);
    if (status != A4SSL_OK) die(status);
    a4ssl_twists_summary s{};
    a4ssl_twists_summary_get(tw, &s);
    std::ostringstream text;
    json maps = json::array();
    text << "twist maps preserving the icosian ring: " << s.map_count << "\n";
    for (uint64_t idx = 0; idx < s.map_count; ++idx) {
        a4ssl_quat root{}, wit{};
        a4ssl_twists_root(tw, idx, &root, &wit);
        text << "  map " << idx << ": root " << quat_text(root) << ", witness "
             << quat_text(wit) << "\n";
        maps.push_back({{"root", quat_json(root)}, {"witness", quat_json(wit)}});
    }
    text << "conjugation/twist group order: " << s.group_order
         << (s.has_order_four_element ? " (contains an element of order 4)" : "") << "\n";
    text << "z^3 = -1: " << (s.z_cubed_is_minus_one ? "yes" : "no") << "\n";
    text << "theta 6-to-1 onto the 20 roots: " << (s.theta_six_to_one ? "yes" : "no") << "\n";
    text << "fixed lattices carry the A4 Gram: " << (s.fixed_lattices_are_a4 ? "yes" : "no")
         << "\n";
    text << "hexagon double cover of the 30 pure roots: " << (s.a2_cover_ok ? "yes" : "no")
         << "\n";
    text << "orbit of L: " << s.orbit_size << " lattices, " << s.copies_containing_one
         << " containing 1\n";
    json body{{"command", "twists"},
              {"map_count", s.map_count},
              {"group_order", s.group_order},
              {"has_order_four_element", s.has_order_four_element != 0},
              {"z_cubed_is_minus_one", s.z_cubed_is_minus_one != 0},
              {"theta_six_to_one", s.theta_six_to_one != 0},
              {"fixed_lattices_are_a4", s.fixed_lattices_are_a4 != 0},
              {"a2_cover_ok", s.a2_cover_ok != 0},
              {"orbit_size", s.orbit_size},
              {"copies_containing_one", s.copies_containing_one},
              {"maps", maps}};
    a4ssl_twists_free(tw);
    out.emit(text.str(), text.str(), body);
    return 0;
}

int cmd_asymptotics(uint64_t x, uint32_t digits, const Output& out) {
    std::ostringstream text, csv;
    csv << "x,F,target,ratio,within_5_percent\n";
    json decades = json::array();
    int final_ok = 1;
    std::vector<uint64_t> points;
    for (uint64_t p = 1000; p < x; p *= 10) points.push_back(p);
    points.push_back(x);
    for (uint64_t px : points) {
        a4ssl_asymptotics rep{};
        int status = a4ssl_asymptotics_get(px, digits, &rep);
        if (status != A4SSL_OK) die(status);
        text << "x = " << px << ": F(x) = " << rep.summatory << ", rho*x^2/2 = " << rep.target
             << ", ratio = " << rep.ratio << "\n";
        csv << px << "," << rep.summatory << "," << rep.target << "," << rep.ratio << ","
            << rep.within_5_percent << "\n";
        decades.push_back({{"x", px}, {"F", rep.summatory}, {"target", rep.target},
                           {"ratio", rep.ratio}, {"within_5_percent", rep.within_5_percent != 0}});
        if (px == x) final_ok = rep.within_5_percent;
    }
    char rho[80];
    int status = a4ssl_rho(digits, rho, sizeof(rho));
    if (status != A4SSL_OK) die(status);
    text << "rho = " << rho << "\n";
    out.emit(text.str(), csv.str(),
             json{{"command", "asymptotics"}, {"rho", rho}, {"points", decades}});
    return final_ok ? 0 : kExitMismatch;
}

int cmd_series(const std::string& lattice, uint64_t terms, const Output& out) {
    std::vector<int64_t> values(terms + 1);
    int status = a4ssl_series(lattice.c_str(), terms, values.data());
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    csv << "n,coefficient\n";
    json arr = json::array();
    text << lattice << " series coefficients:\n";
    for (uint64_t n = 1; n <= terms; ++n) {
        text << "  " << n << ": " << values[n] << "\n";
        csv << n << "," << values[n] << "\n";
        arr.push_back(values[n]);
    }
    out.emit(text.str(), csv.str(),
             json{{"command", "series"}, {"lattice", lattice}, {"terms", terms},
                  {"coefficients", arr}});
    return 0;
}

int cmd_oracle(const std::string& lattice, const std::string& gram_file, uint64_t index,
               uint64_t budget_override, const Output& out) {
    std::string gram_json;
    if (!gram_file.empty()) {
        std::ifstream in(gram_file);
        if (!in) {
            std::cerr << "cannot read gram file: " << gram_file << "\n";
            return kExitUsage;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        gram_json = ss.str();
    }
    a4ssl_oracle_result res{};
    int status = a4ssl_oracle_count(gram_file.empty() ? lattice.c_str() : nullptr,
                                    gram_file.empty() ? nullptr : gram_json.c_str(), index,
                                    budget_override, &res);
    if (status != A4SSL_OK) die(status);
    std::ostringstream text, csv;
    text << "index " << index << ": total " << res.total << ", primitive " << res.primitive
         << "\n";
    csv << "index,total,primitive\n" << index << "," << res.total << "," << res.primitive
        << "\n";
    out.emit(text.str(), csv.str(),
             json{{"command", "oracle"}, {"index", index}, {"total", res.total},
                  {"primitive", res.primitive}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"similar sublattices of the root lattice A4 (icosian construction)"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--format", out.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    uint64_t max_m = 36, m = 4, x = 100000, terms = 13, index = 16;
    uint64_t budget_override = 0;
    uint32_t digits = 12;
    bool primitive = false, nonzero_only = false, claim_primitive = true;
    std::string system = "h4", lattice = "a4", gram_file, matrix_file;

    auto* count = app.add_subcommand("count", "coefficient table f(m), f_pr(m)");
    count->add_option("--max-m", max_m, "largest m");
    count->add_flag("--nonzero-only", nonzero_only, "suppress rows with f(m) = 0");

    auto* enumerate = app.add_subcommand("enumerate", "similar sublattices of index m^2");
    enumerate->add_option("--m", m, "reduced index m")->required();
    enumerate->add_flag("--primitive", primitive, "primitive sublattices only");
    enumerate->add_option("--budget-override", budget_override, "raise the enumeration cap");

    auto* verify = app.add_subcommand("verify", "closed form vs construction vs oracle");
    verify->add_option("--m", m, "reduced index m");
    verify->add_option("--matrix", matrix_file, "verify a matrix file (4 lines of 4 integers)");
    verify->add_flag("--claim-primitive,!--claim-imprimitive", claim_primitive,
                     "primitivity claim for --matrix");

    auto* roots = app.add_subcommand("roots", "root system coordinates");
    roots->add_option("--system", system, "h4, a4 or h3");

    app.add_subcommand("twists", "twist maps, fixed lattices and symmetry structure");

    auto* asymptotics = app.add_subcommand("asymptotics", "summatory function and growth constant");
    asymptotics->add_option("--x", x, "evaluation point");
    asymptotics->add_option("--digits", digits, "decimal digits of the growth constant");

    auto* series = app.add_subcommand("series", "related-lattice Dirichlet coefficients");
    series->add_option("--lattice", lattice, "a1, a2, a3 or z2");
    series->add_option("--terms", terms, "number of coefficients");

    auto* oracle = app.add_subcommand("oracle", "brute-force sublattice counts");
    oracle->add_option("--lattice", lattice, "gram preset: a4 a4dual a2 fcc z2 z3 z4 rect23");
    oracle->add_option("--gram", gram_file, "JSON gram matrix file");
    oracle->add_option("--n", index, "sublattice index")->required();
    oracle->add_option("--budget-override", budget_override, "raise the oracle index cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(max_m, nonzero_only, out);
        if (enumerate->parsed()) return cmd_enumerate(m, primitive, budget_override, out);
        if (verify->parsed()) {
            if (!matrix_file.empty()) return cmd_verify_matrix(matrix_file, m, claim_primitive, out);
            return cmd_verify_m(m, out);
        }
        if (roots->parsed()) return cmd_roots(system, out);
        if (app.get_subcommand("twists")->parsed()) return cmd_twists(out);
        if (asymptotics->parsed()) return cmd_asymptotics(x, digits, out);
        if (series->parsed()) return cmd_series(lattice, terms, out);
        if (oracle->parsed()) return cmd_oracle(lattice, gram_file, index, budget_override, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
