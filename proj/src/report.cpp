#include "greenbn/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace greenbn {

using nlohmann::json;

namespace {

json to_json(const Partition& p) { return json(p.parts()); }
Partition partition_from(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const BiPartition& b) { return json::array({to_json(b.first), to_json(b.second)}); }
BiPartition bipartition_from(const json& j) {
    return {partition_from(j.at(0)), partition_from(j.at(1))};
}

json to_json(const std::vector<BiPartition>& v) {
    json arr = json::array();
    for (const auto& b : v) arr.push_back(to_json(b));
    return arr;
}
std::vector<BiPartition> bipartitions_from(const json& j) {
    std::vector<BiPartition> out;
    for (const auto& e : j) out.push_back(bipartition_from(e));
    return out;
}

std::vector<std::string> poly_coeffs(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

Poly poly_from(const std::vector<std::string>& coeffs) {
    std::vector<Rational> cs;
    for (const auto& s : coeffs) cs.push_back(Rational::from_string(s));
    return Poly(std::move(cs));
}

}  // namespace

bool operator==(const GreenReport& a, const GreenReport& b) {
    return a.n == b.n && a.m == b.m && a.seed == b.seed && a.twist == b.twist &&
           a.basis == b.basis && a.blocks == b.blocks &&
           [&] {
               if (a.a_values.size() != b.a_values.size()) return false;
               for (size_t i = 0; i < a.a_values.size(); ++i)
                   if (!(a.a_values[i] == b.a_values[i])) return false;
               return true;
           }() &&
           a.p == b.p && a.lambda == b.lambda &&
           [&] {
               if (a.tables.size() != b.tables.size()) return false;
               for (size_t i = 0; i < a.tables.size(); ++i)
                   if (!(a.tables[i].column == b.tables[i].column) ||
                       !(a.tables[i].rows == b.tables[i].rows))
                       return false;
               return true;
           }() &&
           a.predicted == b.predicted;
}

ResidualReport build_residual_report(int n, MParam m) {
    ResidualReport r;
    r.n = n;
    r.m = m;
    for (const auto& type : enumerate_subspaces(n, m)) {
        ResidualRow row;
        row.type = type;
        row.center = center_coordinates(type, m);
        row.twice_jumps = jumps(type.b_part, m).twice_jumps;
        row.confluence_size = static_cast<int>(confluence_class(row.center, n, m).size());
        r.rows.push_back(std::move(row));
    }
    return r;
}

SpringerReport build_springer_report(int n, MParam m) {
    SpringerReport r;
    r.n = n;
    r.m = m;
    for (const auto& type : enumerate_subspaces(n, m)) {
        SpringerRow row;
        row.type = type;
        row.sigma = sigma_subspace(type, m);
        row.label = psi(row.sigma.front(), m);
        SubspaceType back = f_bc(row.label, n, m);
        row.roundtrip_ok = center_coordinates(back, m) == center_coordinates(type, m) &&
                           back.a_parts == type.a_parts;
        r.rows.push_back(std::move(row));
    }
    return r;
}

UnipotentReport build_unipotent_report(int n, MParam m) {
    UnipotentReport r;
    r.n = n;
    r.m = m;
    for (const auto& label : unipotent_set(n, m)) {
        UnipotentRow row;
        row.label = label;
        row.phi_class = phi(label, n, m);
        row.type = f_bc(label, n, m);
        r.rows.push_back(std::move(row));
    }
    return r;
}

SymbolsReport build_symbols_report(int n, MParam m) {
    SymbolsReport r;
    r.n = n;
    r.m = m;
    OrderedBasis basis = order_basis(n, m);
    for (int i = 0; i < basis.size(); ++i) {
        SymbolRow row;
        row.item = basis.items[static_cast<size_t>(i)];
        row.a = basis.a_values[static_cast<size_t>(i)];
        row.symbol = msymbol(row.item, m).str();
        row.block = basis.block_of[static_cast<size_t>(i)];
        r.rows.push_back(std::move(row));
    }
    return r;
}

GreenReport build_green_report(const GreenSolution& sol, MParam m, uint64_t seed, bool twist) {
    GreenReport r;
    r.n = 0;
    for (const auto& b : sol.basis.items) r.n = b.weight();
    r.m = m;
    r.seed = seed;
    r.twist = twist;
    r.basis = sol.basis.items;
    r.blocks = sol.basis.blocks;
    r.a_values = sol.basis.a_values;
    const int N = sol.basis.size();
    r.p.resize(static_cast<size_t>(N));
    r.lambda.resize(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            r.p[static_cast<size_t>(i)].push_back(poly_coeffs(sol.P.at(i, j).as_poly()));
            const RatFunc& f = sol.Lambda.at(i, j);
            r.lambda[static_cast<size_t>(i)].emplace_back(poly_coeffs(f.num()),
                                                          poly_coeffs(f.den()));
        }
    }
    for (const auto& item : sol.basis.items) {
        r.tables.push_back(graded_table(sol, item, twist));
        r.predicted.push_back(predicted_central_character(item, m));
    }
    return r;
}

namespace {

json rows_to_json(const ResidualReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"a_parts", to_json(row.type.a_parts)},
                        {"b_part", to_json(row.type.b_part)},
                        {"type", row.type.str()},
                        {"center", row.center.twice_coords},
                        {"jumps", row.twice_jumps},
                        {"confluence_size", row.confluence_size}});
    }
    return rows;
}

}  // namespace

std::string emit_json(const ResidualReport& r) {
    json j{{"report", "residual"}, {"n", r.n}, {"m", r.m.str()}, {"rows", rows_to_json(r)}};
    return j.dump(2);
}

ResidualReport parse_residual_report(const std::string& text) {
    json j = json::parse(text);
    ResidualReport r;
    r.n = j.at("n").get<int>();
    r.m = MParam::parse(j.at("m").get<std::string>());
    for (const auto& e : j.at("rows")) {
        ResidualRow row;
        row.type = {partition_from(e.at("a_parts")), partition_from(e.at("b_part"))};
        row.center = CentralCharacter{e.at("center").get<std::vector<int>>()};
        row.twice_jumps = e.at("jumps").get<std::vector<int>>();
        row.confluence_size = e.at("confluence_size").get<int>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string emit_json(const SpringerReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"a_parts", to_json(row.type.a_parts)},
                        {"b_part", to_json(row.type.b_part)},
                        {"type", row.type.str()},
                        {"sigma", to_json(row.sigma)},
                        {"label", to_json(row.label.parts)},
                        {"roundtrip_ok", row.roundtrip_ok}});
    }
    json j{{"report", "springer"}, {"n", r.n}, {"m", r.m.str()}, {"rows", rows}};
    return j.dump(2);
}

SpringerReport parse_springer_report(const std::string& text) {
    json j = json::parse(text);
    SpringerReport r;
    r.n = j.at("n").get<int>();
    r.m = MParam::parse(j.at("m").get<std::string>());
    for (const auto& e : j.at("rows")) {
        SpringerRow row;
        row.type = {partition_from(e.at("a_parts")), partition_from(e.at("b_part"))};
        row.sigma = bipartitions_from(e.at("sigma"));
        row.label = UnipotentLabel{partition_from(e.at("label"))};
        row.roundtrip_ok = e.at("roundtrip_ok").get<bool>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string emit_json(const UnipotentReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"label", to_json(row.label.parts)},
                        {"phi_class", to_json(row.phi_class)},
                        {"a_parts", to_json(row.type.a_parts)},
                        {"b_part", to_json(row.type.b_part)},
                        {"type", row.type.str()}});
    }
    json j{{"report", "unipotent"}, {"n", r.n}, {"m", r.m.str()}, {"rows", rows}};
    return j.dump(2);
}

UnipotentReport parse_unipotent_report(const std::string& text) {
    json j = json::parse(text);
    UnipotentReport r;
    r.n = j.at("n").get<int>();
    r.m = MParam::parse(j.at("m").get<std::string>());
    for (const auto& e : j.at("rows")) {
        UnipotentRow row;
        row.label = UnipotentLabel{partition_from(e.at("label"))};
        row.phi_class = bipartitions_from(e.at("phi_class"));
        row.type = {partition_from(e.at("a_parts")), partition_from(e.at("b_part"))};
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string emit_json(const SymbolsReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"item", to_json(row.item)},
                        {"a_twice", row.a.twice},
                        {"symbol", row.symbol},
                        {"block", row.block}});
    }
    json j{{"report", "symbols"}, {"n", r.n}, {"m", r.m.str()}, {"rows", rows}};
    return j.dump(2);
}

SymbolsReport parse_symbols_report(const std::string& text) {
    json j = json::parse(text);
    SymbolsReport r;
    r.n = j.at("n").get<int>();
    r.m = MParam::parse(j.at("m").get<std::string>());
    for (const auto& e : j.at("rows")) {
        SymbolRow row;
        row.item = bipartition_from(e.at("item"));
        row.a = AValue{e.at("a_twice").get<long long>(), 0};
        row.symbol = e.at("symbol").get<std::string>();
        row.block = e.at("block").get<int>();
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::string emit_json(const GreenReport& r) {
    json basis = to_json(r.basis);
    json avals = json::array();
    for (const auto& a : r.a_values) avals.push_back(a.twice);
    json p = json::array();
    for (const auto& row : r.p) {
        json jr = json::array();
        for (const auto& cell : row) jr.push_back(cell);
        p.push_back(jr);
    }
    json lam = json::array();
    for (const auto& row : r.lambda) {
        json jr = json::array();
        for (const auto& cell : row) jr.push_back({{"num", cell.first}, {"den", cell.second}});
        lam.push_back(jr);
    }
    json tables = json::object();
    json predicted = json::object();
    for (size_t i = 0; i < r.tables.size(); ++i) {
        json degrees = json::object();
        for (const auto& [deg, labels] : r.tables[i].rows)
            degrees[std::to_string(deg)] = to_json(labels);
        tables[r.tables[i].column.str()] = degrees;
        predicted[r.basis[i].str()] = r.predicted[i].twice_coords;
    }
    json j{{"report", "green"},
           {"n", r.n},
           {"m", r.m.str()},
           {"seed", r.seed},
           {"twist", r.twist},
           {"basis", basis},
           {"blocks", r.blocks},
           {"a_twice", avals},
           {"P", p},
           {"Lambda", lam},
           {"tables", tables},
           {"predicted", predicted}};
    return j.dump(2);
}

GreenReport parse_green_report(const std::string& text) {
    json j = json::parse(text);
    GreenReport r;
    r.n = j.at("n").get<int>();
    r.m = MParam::parse(j.at("m").get<std::string>());
    r.seed = j.at("seed").get<uint64_t>();
    r.twist = j.at("twist").get<bool>();
    r.basis = bipartitions_from(j.at("basis"));
    r.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("a_twice")) r.a_values.push_back(AValue{e.get<long long>(), 0});
    for (const auto& jr : j.at("P")) {
        std::vector<std::vector<std::string>> row;
        for (const auto& cell : jr) row.push_back(cell.get<std::vector<std::string>>());
        r.p.push_back(std::move(row));
    }
    for (const auto& jr : j.at("Lambda")) {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> row;
        for (const auto& cell : jr)
            row.emplace_back(cell.at("num").get<std::vector<std::string>>(),
                             cell.at("den").get<std::vector<std::string>>());
        r.lambda.push_back(std::move(row));
    }
    const auto& tables = j.at("tables");
    const auto& predicted = j.at("predicted");
    for (const auto& item : r.basis) {
        GradedTable t;
        t.column = item;
        for (const auto& [degStr, labels] : tables.at(item.str()).items())
            t.rows[std::stoi(degStr)] = bipartitions_from(labels);
        r.tables.push_back(std::move(t));
        r.predicted.push_back(
            CentralCharacter{predicted.at(item.str()).get<std::vector<int>>()});
    }
    return r;
}

namespace {

std::string twice_str(int tv) {
    std::ostringstream os;
    if (tv % 2 == 0) os << tv / 2;
    else os << tv << "/2";
    return os.str();
}

std::string jumps_str(const std::vector<int>& tj) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < tj.size(); ++i) {
        if (i) os << ",";
        os << twice_str(tj[i]);
    }
    os << ")";
    return os.str();
}

std::string class_str(const std::vector<BiPartition>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << "}";
    return os.str();
}

}  // namespace

std::string render_text(const ResidualReport& r) {
    std::ostringstream os;
    os << "residual subspaces  n=" << r.n << "  m=" << r.m.str() << "\n";
    for (const auto& row : r.rows)
        os << "  " << row.type.str() << "  center=" << row.center.str()
           << "  jumps=" << jumps_str(row.twice_jumps)
           << "  confluence=" << row.confluence_size << "\n";
    return os.str();
}

std::string render_text(const SpringerReport& r) {
    std::ostringstream os;
    os << "springer correspondents  n=" << r.n << "  m=" << r.m.str() << "\n";
    for (const auto& row : r.rows)
        os << "  " << row.type.str() << "  label=" << row.label.str() << "  |sigma|="
           << row.sigma.size() << "  sigma=" << class_str(row.sigma)
           << "  roundtrip=" << (row.roundtrip_ok ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string render_text(const UnipotentReport& r) {
    std::ostringstream os;
    os << "unipotent labels  n=" << r.n << "  m=" << r.m.str() << "\n";
    for (const auto& row : r.rows)
        os << "  " << row.label.str() << "  type=" << row.type.str()
           << "  phi=" << class_str(row.phi_class) << "\n";
    return os.str();
}

std::string render_text(const SymbolsReport& r) {
    std::ostringstream os;
    os << "symbols  n=" << r.n << "  m=" << r.m.str() << "\n";
    for (const auto& row : r.rows)
        os << "  " << row.item.str() << "  a=" << row.a.str() << "  block=" << row.block << "  "
           << row.symbol << "\n";
    return os.str();
}

std::string render_text(const GreenReport& r) {
    std::ostringstream os;
    os << "green functions  n=" << r.n << "  m=" << r.m.str() << "  seed=" << r.seed
       << (r.twist ? "  (sign-twisted labels)" : "") << "\n";
    for (size_t i = 0; i < r.tables.size(); ++i) {
        os << "column " << r.basis[i].str() << "  a=" << twice_str(static_cast<int>(
              r.a_values[i].twice))
           << "  center=" << r.predicted[i].str() << "\n";
        for (const auto& [deg, labels] : r.tables[i].rows) {
            os << "  " << deg << ": ";
            for (size_t k = 0; k < labels.size(); ++k) {
                if (k) os << " + ";
                os << labels[k].str();
            }
            os << "\n";
        }
    }
    return os.str();
}

namespace {

constexpr const char* kCacheMagic = "greenbn-cache 1";

std::string cache_path(const std::string& dir, int n) {
    return dir + "/chartable_" + std::to_string(n) + ".txt";
}

bool write_cache(const std::string& dir, const CharTable& table, const MatrixRF& w) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream os(cache_path(dir, table.n), std::ios::trunc);
    if (!os) return false;
    os << kCacheMagic << "\n" << table.n << "\n";
    auto put_partition = [&os](const Partition& p) {
        os << p.length();
        for (int x : p.parts()) os << " " << x;
        os << "\n";
    };
    os << table.classes.size() << "\n";
    for (const auto& c : table.classes) {
        put_partition(c.pos_cycles);
        put_partition(c.neg_cycles);
        os << c.size << "\n";
    }
    for (const auto& a : table.irreps) {
        put_partition(a.first);
        put_partition(a.second);
    }
    for (const auto& row : table.values) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << "\n";
    }
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) {
            Poly p = w.at(i, j).as_poly();
            os << p.degree();
            for (const auto& coeff : p.coeffs()) os << " " << coeff.str();
            os << "\n";
        }
    return static_cast<bool>(os);
}

std::optional<std::pair<CharTable, MatrixRF>> load_cache(const std::string& dir, int n) {
    std::ifstream is(cache_path(dir, n));
    if (!is) return std::nullopt;
    std::string magic;
    std::getline(is, magic);
    if (magic != kCacheMagic) return std::nullopt;
    int fileN = -1;
    if (!(is >> fileN) || fileN != n) return std::nullopt;
    size_t k = 0;
    if (!(is >> k) || k == 0 || k > 100000) return std::nullopt;
    auto get_partition = [&is]() -> std::optional<Partition> {
        int len;
        if (!(is >> len) || len < 0 || len > 10000) return std::nullopt;
        std::vector<int> parts(static_cast<size_t>(len));
        for (auto& x : parts)
            if (!(is >> x)) return std::nullopt;
        return Partition(std::move(parts));
    };
    CharTable table;
    table.n = n;
    for (size_t i = 0; i < k; ++i) {
        auto pos = get_partition();
        auto neg = get_partition();
        long long size;
        if (!pos || !neg || !(is >> size)) return std::nullopt;
        table.classes.push_back({*pos, *neg, size});
    }
    for (size_t i = 0; i < k; ++i) {
        auto xi = get_partition();
        auto eta = get_partition();
        if (!xi || !eta) return std::nullopt;
        table.irreps.push_back({*xi, *eta});
    }
    table.values.assign(k, std::vector<long long>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < k; ++c)
            if (!(is >> table.values[i][c])) return std::nullopt;
    MatrixRF w(static_cast<int>(k), static_cast<int>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            int deg;
            if (!(is >> deg) || deg < -1 || deg > 100000) return std::nullopt;
            std::vector<Rational> coeffs;
            for (int d = 0; d <= deg; ++d) {
                std::string tok;
                if (!(is >> tok)) return std::nullopt;
                try {
                    coeffs.push_back(Rational::from_string(tok));
                } catch (const std::exception&) {
                    return std::nullopt;
                }
            }
            w.at(static_cast<int>(i), static_cast<int>(j)) = RatFunc(Poly(std::move(coeffs)));
        }
    // Cross-check the cached table against fresh bipartition ordering.
    if (table.irreps != bipartitions(n)) return std::nullopt;
    return std::make_pair(std::move(table), std::move(w));
}

}  // namespace

std::pair<CharTable, MatrixRF> table_and_omega(int n, const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        if (auto cached = load_cache(cache_dir, n)) return std::move(*cached);
    }
    CharTable table = char_table(n);
    MatrixRF w = omega(table);
    if (!cache_dir.empty()) write_cache(cache_dir, table, w);
    return {std::move(table), std::move(w)};
}

}  // namespace greenbn
