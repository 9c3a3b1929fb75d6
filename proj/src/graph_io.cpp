#include "lgr/graph_io.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <vector>

#include "lgr/error.hpp"

namespace lgr {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void syntax(int line_no, const std::string& what) {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": " + what);
}

int to_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        syntax(line_no, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

RawLayeredGraph parse_raw(std::string_view text) {
    RawLayeredGraph raw;
    bool header = false;
    int q = -1;
    std::vector<char> declared;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (!header) {
            if (tok.size() != 2 || tok[0] != "LGR" || tok[1] != "v1") syntax(line_no, "expected header 'LGR v1'");
            header = true;
            continue;
        }
        const std::string_view directive = tok[0];
        if (directive == "k") {
            if (tok.size() != 2) syntax(line_no, "usage: k <int>");
            if (raw.k != 0) syntax(line_no, "k given twice");
            raw.k = to_int(tok[1], line_no);
            if (raw.k < 1) syntax(line_no, "k must be positive");
        } else if (directive == "q") {
            if (tok.size() != 2) syntax(line_no, "usage: q <int>");
            if (q != -1) syntax(line_no, "q given twice");
            if (raw.k == 0) syntax(line_no, "k must precede q");
            q = to_int(tok[1], line_no);
            if (q < 1) syntax(line_no, "q must be positive");
            raw.present.assign(static_cast<std::size_t>(q), {});
            declared.assign(static_cast<std::size_t>(q), 0);
        } else if (directive == "layer") {
            if (q == -1) syntax(line_no, "layer before q");
            if (tok.size() < 3 || tok[2] != "present") syntax(line_no, "usage: layer <i> present <labels...>");
            const int i = to_int(tok[1], line_no);
            if (i < 1 || i > q) syntax(line_no, "layer index " + std::to_string(i) + " outside 1.." + std::to_string(q));
            if (declared[i - 1]) syntax(line_no, "layer " + std::to_string(i) + " declared twice");
            declared[i - 1] = 1;
            for (std::size_t t = 3; t < tok.size(); ++t) raw.present[i - 1].push_back(to_int(tok[t], line_no));
        } else if (directive == "edge" || directive == "inter") {
            if (q == -1) syntax(line_no, std::string(directive) + " before q");
            if (tok.size() != 4) syntax(line_no, "usage: " + std::string(directive) + " <i> <a> <b>");
            const int i = to_int(tok[1], line_no);
            const int a = to_int(tok[2], line_no);
            const int b = to_int(tok[3], line_no);
            if (directive == "edge") {
                raw.edges.push_back({i, a, b});
            } else {
                raw.inters.push_back({i, a, i + 1, b});
            }
        } else {
            syntax(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }
    if (!header) syntax(line_no, "missing header 'LGR v1'");
    if (raw.k == 0) syntax(line_no, "missing k");
    if (q == -1) syntax(line_no, "missing q");
    for (int i = 0; i < q; ++i) {
        if (!declared[i]) syntax(line_no, "layer " + std::to_string(i + 1) + " never declared");
    }
    return raw;
}

LayeredGraph parse(std::string_view text) { return validate(parse_raw(text)); }

std::string serialize(const LayeredGraph& g) {
    const RawLayeredGraph raw = describe(g);
    std::ostringstream out;
    out << "LGR v1\n";
    out << "k " << raw.k << "\n";
    out << "q " << raw.present.size() << "\n";
    for (std::size_t i = 0; i < raw.present.size(); ++i) {
        out << "layer " << i + 1 << " present";
        for (int x : raw.present[i]) out << ' ' << x;
        out << '\n';
    }
    for (const auto& e : raw.edges) out << "edge " << e.layer << ' ' << e.a << ' ' << e.b << '\n';
    for (const auto& e : raw.inters) out << "inter " << e.from_layer << ' ' << e.a << ' ' << e.b << '\n';
    return out.str();
}

namespace {

void check_dimensions(int k, int q) {
    if (k < 1 || k > kMaxLabels || q < 1) {
        throw Error(ErrorCode::InvalidDimensions, "need 1 <= k <= " + std::to_string(kMaxLabels) + " and q >= 1");
    }
}

void check_density(double d) {
    if (!(d >= 0.0 && d <= 1.0)) throw Error(ErrorCode::InvalidDimensions, "density must lie in [0,1]");
}

RawLayeredGraph all_present(int k, int q) {
    RawLayeredGraph raw;
    raw.k = k;
    raw.present.assign(static_cast<std::size_t>(q), {});
    for (auto& labels : raw.present) {
        for (int x = 1; x <= k; ++x) labels.push_back(x);
    }
    return raw;
}

LayeredGraph generate(int k, int q, double intra_density, double inter_density, std::uint64_t seed, bool linear) {
    check_dimensions(k, q);
    check_density(intra_density);
    check_density(inter_density);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep_intra(intra_density);
    std::bernoulli_distribution keep_inter(inter_density);

    RawLayeredGraph raw = all_present(k, q);
    for (int i = 1; i <= q; ++i) {
        for (int a = 1; a <= k; ++a) {
            for (int b = a + 1; b <= k; ++b) {
                if (keep_intra(rng)) raw.edges.push_back({i, a, b});
            }
        }
    }
    for (int i = 1; i < q; ++i) {
        for (int a = 1; a <= k; ++a) {
            for (int b = 1; b <= k; ++b) {
                if (linear && a != b) continue;
                if (keep_inter(rng)) raw.inters.push_back({i, a, i + 1, b});
            }
        }
    }
    return validate(raw);
}

}  // namespace

LayeredGraph gen_full(int k, int q) { return generate(k, q, 1.0, 1.0, 0, false); }

LayeredGraph gen_path(int q) { return gen_full(1, q); }

LayeredGraph gen_random(int k, int q, double intra_density, double inter_density, std::uint64_t seed) {
    return generate(k, q, intra_density, inter_density, seed, false);
}

LayeredGraph gen_llg(int k, int q, double intra_density, double inter_density, std::uint64_t seed) {
    return generate(k, q, intra_density, inter_density, seed, true);
}

}  // namespace lgr
