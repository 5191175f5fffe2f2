// Command-line front end: webs, flows, bij, foam, bracket, verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sl3/bijection.hpp"
#include "sl3/flows.hpp"
#include "sl3/foamword.hpp"
#include "sl3/ladderweb.hpp"
#include "sl3/verify.hpp"

using namespace sl3;
using Json = nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Preset {
    const char* name;
    const char* lower;
    const char* upper;
    int n;
    int level;
};

const Preset kPresets[] = {
    {"arc", "F1^2", "F1^2", 2, 1},
    {"circle", "F1^2", "F1^2", 2, 1},
    {"theta", "F1 F2 F1", "F1 F2 F1", 3, 1},
    {"hexagon", "F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2", "F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2", 6, 3},
    {"circles-nested", "F2 F1^2 F3^2 F2^2", "F2 F1^2 F3^2 F2^2", 4, 2},
    {"circles-split", "F1^2 F2 F3^2 F2^2", "F1^2 F2 F3^2 F2^2", 4, 2},
};

const Preset& find_preset(const std::string& name) {
    for (const auto& p : kPresets)
        if (name == p.name) return p;
    std::string known;
    for (const auto& p : kPresets) known += std::string(known.empty() ? "" : ", ") + p.name;
    throw UsageError("unknown preset '" + name + "' (known: " + known + ")");
}

// Rows of named columns, printed as text, JSON or CSV.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
    void add(std::vector<Json> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out, const std::string& format) const {
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& row : rows_) {
                Json obj = Json::object();
                for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
                arr.push_back(obj);
            }
            out << arr.dump(2) << "\n";
        } else if (format == "csv") {
            for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
            out << "\n";
            for (const auto& row : rows_) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
                out << "\n";
            }
        } else {
            std::vector<std::size_t> width(columns_.size());
            for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
            for (const auto& row : rows_)
                for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], plain(row[i]).size());
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    out << cells[i];
                    if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
                }
                out << "\n";
            };
            line(columns_);
            for (const auto& row : rows_) {
                std::vector<std::string> cells;
                for (const auto& c : row) cells.push_back(plain(c));
                line(cells);
            }
        }
    }

private:
    static std::string plain(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
    static std::string csv_cell(const Json& j) {
        std::string s = plain(j);
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
    }

    std::vector<std::string> columns_;
    std::vector<std::vector<Json>> rows_;
};

struct Options {
    std::string format = "text";
    int max_n = 6;
    int max_lt = 0;
    int jobs = 1;
    unsigned seed = 0;
};

SignString parse_signs(const std::string& text) {
    try {
        SignString s = SignString::parse(text);
        if (!s.is_classical()) throw UsageError("sign string '" + text + "' must use only + and -");
        s.level();
        return s;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("bad sign string '" + text + "': " + e.what());
    }
}

std::vector<SignString> sign_strings(const std::string& signs, const Options& opt) {
    if (!signs.empty()) return {parse_signs(signs)};
    std::vector<SignString> out;
    for (int n = 1; n <= opt.max_n; ++n)
        for (const auto& s : classical_sign_strings(n)) out.push_back(s);
    return out;
}

// Runs f over items with up to `jobs` workers; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) -> std::vector<decltype(f(items.front()))> {
    using R = decltype(f(items.front()));
    std::vector<R> out(items.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    for (std::size_t start = 0; start < items.size(); start += jobs) {
        std::vector<std::future<R>> batch;
        for (std::size_t i = start; i < std::min(items.size(), start + jobs); ++i)
            batch.push_back(std::async(std::launch::async, f, std::cref(items[i])));
        for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
    }
    return out;
}

Json read_json(const std::string& text) {
    std::string payload = text;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw UsageError("cannot read " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        payload = ss.str();
    }
    try {
        return Json::parse(payload);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

LadderWeb web_from(const std::string& word, int n, int level) {
    LTWord w;
    try {
        w = LTWord::parse(word);
    } catch (const std::exception& e) {
        throw UsageError("bad word '" + word + "': " + e.what());
    }
    auto web = build_web(w, n, level);
    if (!web) throw UsageError("word '" + word + "' is zero on " + std::to_string(n) + " strands at level " + std::to_string(level));
    return *web;
}

Json moved_json(const Flow& f) {
    Json arr = Json::array();
    for (ColorSet c : f.moved) arr.push_back(colors_str(c));
    return arr;
}

int cmd_webs(const std::string& signs, bool ascii, const Options& opt) {
    Table t({"signs", "tableau", "word", "length", "total_length"});
    for (const auto& s : sign_strings(signs, opt)) {
        for (const auto& b : enumerate_basis(s)) {
            if (opt.max_lt > 0 && b.web.word().total_length() > opt.max_lt) continue;
            t.add({s.str(), b.tableau.str(), b.web.word().str(), b.web.word().length(), b.web.word().total_length()});
            if (ascii && opt.format == "text") std::cout << b.web.word().str() << "\n" << b.web.ascii() << "\n";
        }
    }
    t.print(std::cout, opt.format);
    return 0;
}

std::vector<std::pair<SignString, LadderWeb>> webs_for(const std::string& signs, const std::string& preset,
                                                       const std::string& word, int n, int level, const Options& opt) {
    std::vector<std::pair<SignString, LadderWeb>> out;
    if (!preset.empty()) {
        const Preset& p = find_preset(preset);
        LadderWeb w = web_from(p.lower, p.n, p.level);
        out.push_back({w.boundary(), w});
    } else if (!word.empty()) {
        LadderWeb w = web_from(word, n, level);
        out.push_back({w.boundary(), w});
    } else {
        for (const auto& s : sign_strings(signs, opt))
            for (const auto& b : enumerate_basis(s)) out.push_back({s, b.web});
    }
    return out;
}

int cmd_flows(const std::string& signs, const std::string& preset, const std::string& word, int n, int level,
              const Options& opt) {
    Table t({"signs", "word", "flow", "state", "weight", "colstrict"});
    for (const auto& [s, w] : webs_for(signs, preset, word, n, level, opt)) {
        for (const auto& f : enumerate_flows(w)) {
            t.add({s.str(), w.word().str(), moved_json(f), state_str(boundary_state(w, f)), weight(w, f),
                   flow_to_colstrict(w, f).str()});
        }
    }
    t.print(std::cout, opt.format);
    return 0;
}

int cmd_bij(const std::string& signs, const std::string& payload, const std::string& tableau, int n,
            const Options& opt) {
    if (!tableau.empty()) {
        StdMultitableau3 t;
        try {
            t = StdMultitableau3::parse(tableau);
            t.validate();
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad tableau: ") + e.what());
        }
        auto g = grow(t, n);
        Table out({"tableau", "word", "flow", "state", "weight"});
        out.add({t.str(), g.web.word().str(), moved_json(g.flow), state_str(boundary_state(g.web, g.flow)),
                 weight(g.web, g.flow)});
        out.print(std::cout, opt.format);
        if (opt.format == "text") {
            for (const auto& level : weight_diagram_tower(t, g.web.n())) std::cout << level.str() << "\n";
        }
        return 0;
    }
    Table out({"signs", "word", "flow", "iota", "degree", "weight", "moves", "roundtrip"});
    auto emit = [&](const SignString& s, const LadderWeb& w, const Flow& f) {
        auto t = iota(w, f);
        Json moves = Json::array();
        for (int k = 1; k <= static_cast<int>(w.steps().size()); ++k) moves.push_back(classify_step(w, f, k).str());
        auto g = grow(t, w.n());
        bool ok = g.web == w && g.flow == f;
        out.add({s.str(), w.word().str(), moved_json(f), t.str(), bkw_degree(t).total, weight(w, f), moves,
                 ok ? "yes" : "no"});
        return ok;
    };
    bool all_ok = true;
    if (!payload.empty()) {
        Json j = read_json(payload);
        try {
            LadderWeb w = web_from(j.at("word").get<std::string>(), j.at("n").get<int>(), j.at("level").get<int>());
            std::vector<ColorSet> moved;
            for (const auto& m : j.at("flow")) moved.push_back(m.get<int>());
            Flow f = flow_from_moves(w, moved);
            all_ok = emit(w.boundary(), w, f);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("payload: ") + e.what());
        }
    } else {
        for (const auto& s : sign_strings(signs, opt))
            for (const auto& b : enumerate_basis(s))
                for (const auto& f : enumerate_flows(b.web)) all_ok = emit(s, b.web, f) && all_ok;
    }
    out.print(std::cout, opt.format);
    return all_ok ? 0 : kFailed;
}

int cmd_foam_basis(const std::string& signs, const Options& opt) {
    Table t({"signs", "shape", "top", "bottom", "degree", "word"});
    for (const auto& s : sign_strings(signs, opt))
        for (const auto& bf : enumerate_cellular_basis(s))
            t.add({s.str(), bf.shape.str(), bf.top_tableau.str(), bf.bottom_tableau.str(), bf.degree(), bf.word.str()});
    t.print(std::cout, opt.format);
    return 0;
}

int cmd_foam_dims(const std::string& signs, const Options& opt) {
    Table t({"signs", "u", "v", "graded_dim", "bracket", "match"});
    bool all = true;
    for (const auto& s : sign_strings(signs, opt)) {
        auto basis = enumerate_basis(s);
        for (const auto& u : basis) {
            for (const auto& v : basis) {
                auto gd = pair_graded_dim(u.web, v.web);
                auto br = bracket(close(u.web, v.web));
                all = all && gd == br;
                t.add({s.str(), u.web.word().str(), v.web.word().str(), gd.str(), br.str(), gd == br ? "yes" : "no"});
            }
        }
    }
    t.print(std::cout, opt.format);
    return all ? 0 : kFailed;
}

int cmd_foam_idem(const std::string& shape_text, const Options& opt) {
    Multipartition3 shape;
    try {
        shape = Multipartition3::from_json(read_json(shape_text));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad shape: ") + e.what());
    }
    auto dots = dot_placement(shape);
    Table t({"shape", "idempotent", "residues", "dots", "superstandard", "degree"});
    auto ref = superstandard(shape);
    t.add({shape.str(), idempotent(shape).str(), residue_sequence(ref), dots, ref.str(), bkw_degree(ref).total});
    t.print(std::cout, opt.format);
    return 0;
}

int cmd_bracket(const std::string& pair, const std::string& signs, const std::string& lower, const std::string& upper,
                int n, int level, const Options& opt) {
    if (!pair.empty()) {
        const Preset& p = find_preset(pair);
        auto br = bracket(close(web_from(p.lower, p.n, p.level), web_from(p.upper, p.n, p.level)));
        if (opt.format == "text") {
            std::cout << br.str() << "\n";
        } else {
            Table t({"pair", "bracket"});
            t.add({pair, br.str()});
            t.print(std::cout, opt.format);
        }
        return 0;
    }
    if (!lower.empty()) {
        auto br = bracket(close(web_from(lower, n, level), web_from(upper.empty() ? lower : upper, n, level)));
        std::cout << br.str() << "\n";
        return 0;
    }
    Table t({"signs", "u", "v", "bracket"});
    for (const auto& s : sign_strings(signs, opt)) {
        auto basis = enumerate_basis(s);
        for (const auto& u : basis)
            for (const auto& v : basis)
                t.add({s.str(), u.web.word().str(), v.web.word().str(), bracket(close(u.web, v.web)).str()});
    }
    t.print(std::cout, opt.format);
    return 0;
}

int cmd_verify(const std::string& property, const std::string& signs, const Options& opt) {
    std::vector<std::string> props;
    if (property == "all") {
        props = property_names();
    } else {
        bool known = false;
        for (const auto& p : property_names()) known = known || p == property;
        if (!known) throw UsageError("unknown property '" + property + "'");
        props = {property};
    }
    std::vector<std::pair<std::string, SignString>> units;
    for (const auto& p : props)
        for (const auto& s : sign_strings(signs, opt)) units.push_back({p, s});
    auto results = parallel_map(units, opt.jobs, [](const std::pair<std::string, SignString>& u) {
        return check_property(u.first, u.second);
    });
    std::map<std::string, std::pair<std::size_t, bool>> summary;
    std::optional<CheckResult> first_failure;
    for (const auto& r : results) {
        auto& [count, ok] = summary.try_emplace(r.property, 0, true).first->second;
        count += r.units;
        ok = ok && r.ok;
        if (!r.ok && !first_failure) first_failure = r;
    }
    Table t({"property", "units", "status"});
    for (const auto& p : props) t.add({p, summary[p].first, summary[p].second ? "ok" : "FAILED"});
    t.print(std::cout, opt.format);
    if (first_failure) {
        Json dump{{"property", first_failure->property},
                  {"signs", first_failure->signs},
                  {"detail", first_failure->detail},
                  {"payload", first_failure->counterexample}};
        std::cout << "counterexample: " << dump.dump() << "\n";
        return kFailed;
    }
    if (opt.format == "text") {
        if (property == "roundtrip") std::cout << "all flow/web pairs roundtrip\n";
        else std::cout << "all properties hold\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sl3 webs, flows, multitableaux and foams"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "CSV columns:\n"
        "  webs    signs,tableau,word,length,total_length\n"
        "  flows   signs,word,flow,state,weight,colstrict\n"
        "  bij     signs,word,flow,iota,degree,weight,moves,roundtrip\n"
        "  foam basis  signs,shape,top,bottom,degree,word\n"
        "  foam dims   signs,u,v,graded_dim,bracket,match\n"
        "  bracket signs,u,v,bracket\n"
        "  verify  property,units,status\n"
        "Presets: arc circle theta hexagon circles-nested circles-split\n"
        "Exit status: 0 success, 1 verification failure, 2 usage error");
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-n", opt.max_n, "Largest number of boundary points")->check(CLI::Range(1, 9));
    app.add_option("--max-lt", opt.max_lt, "Largest total word length listed by webs; 0 lists all")->check(CLI::NonNegativeNumber);
    bool as_json = false, as_csv = false;
    app.add_flag("--json", as_json, "Same as --format json");
    app.add_flag("--csv", as_csv, "Same as --format csv");
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 64));
    app.add_option("--seed", opt.seed, "Reserved; does not change any output");

    std::string signs, preset, word, payload, tableau, pair, lower, upper, property, shape;
    int n = 0, level = 0;
    bool ascii = false;

    auto* webs = app.add_subcommand("webs", "List basis webs");
    webs->add_option("--signs", signs, "Sign string such as +-+-");
    webs->add_flag("--ascii", ascii, "Print layer diagrams");

    auto* flows = app.add_subcommand("flows", "List flows on webs");
    flows->add_option("--signs", signs, "Sign string");
    flows->add_option("--preset", preset, "Named web");
    flows->add_option("--word", word, "Ladder word such as \"F1 F2^2\"");
    flows->add_option("--n", n, "Number of strands");
    flows->add_option("--level", level, "Level");

    auto* bij = app.add_subcommand("bij", "Map flows to multitableaux and back");
    bij->add_option("--signs", signs, "Sign string");
    bij->add_option("--payload", payload, "Web and flow as JSON, or @file");
    bij->add_option("--tableau", tableau, "Grow a tableau such as \"(1 | - | 1/2)\"");
    bij->add_option("--n", n, "Number of strands for --tableau");

    auto* foam = app.add_subcommand("foam", "Foam basis, graded dimensions and idempotents");
    foam->require_subcommand(1);
    foam->fallthrough();
    auto* foam_basis = foam->add_subcommand("basis", "Cellular basis");
    foam_basis->add_option("--signs", signs, "Sign string");
    auto* foam_dims = foam->add_subcommand("dims", "Graded dimensions against brackets");
    foam_dims->add_option("--signs", signs, "Sign string");
    auto* foam_idem = foam->add_subcommand("idem", "Idempotent and dots of a shape");
    foam_idem->add_option("--shape", shape, "Shape JSON such as {\"components\":[[2,1],[1],[2,1]]}")->required();

    auto* br = app.add_subcommand("bracket", "Evaluate closed webs");
    br->add_option("--pair", pair, "Preset name");
    br->add_option("--signs", signs, "All basis pairs of a sign string");
    br->add_option("--lower", lower, "Lower ladder word");
    br->add_option("--upper", upper, "Upper ladder word");
    br->add_option("--n", n, "Number of strands");
    br->add_option("--level", level, "Level");

    auto* verify = app.add_subcommand("verify", "Check properties exhaustively");
    verify->add_option("property", property, "roundtrip, degree, unitriangular, gdf, homogeneity, cellular, brackets, ltlength or all")
        ->required();
    verify->add_option("--signs", signs, "Restrict to one sign string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    if (as_json && as_csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return kUsage;
    }
    if (as_json) opt.format = "json";
    if (as_csv) opt.format = "csv";

    try {
        if (*webs) return cmd_webs(signs, ascii, opt);
        if (*flows) return cmd_flows(signs, preset, word, n, level, opt);
        if (*bij) return cmd_bij(signs, payload, tableau, n, opt);
        if (*foam_basis) return cmd_foam_basis(signs, opt);
        if (*foam_dims) return cmd_foam_dims(signs, opt);
        if (*foam_idem) return cmd_foam_idem(shape, opt);
        if (*br) return cmd_bracket(pair, signs, lower, upper, n, level, opt);
        if (*verify) return cmd_verify(property, signs, opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
