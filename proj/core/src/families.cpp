#include "graphspark/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace graphspark {
namespace {

const std::map<std::string, FamilySpec::Kind, std::less<>>& kind_names() {
    static const std::map<std::string, FamilySpec::Kind, std::less<>> m = {
        {"path", FamilySpec::Kind::path},
        {"cycle", FamilySpec::Kind::cycle},
        {"complete", FamilySpec::Kind::complete},
        {"kbip", FamilySpec::Kind::complete_bipartite},
        {"spider", FamilySpec::Kind::spider},
        {"friendship", FamilySpec::Kind::friendship},
        {"hypercube3", FamilySpec::Kind::hypercube3},
        {"cart", FamilySpec::Kind::cartesian},
    };
    return m;
}

std::string kind_name(FamilySpec::Kind k) {
    for (const auto& [name, kind] : kind_names())
        if (kind == k) return name;
    return "?";
}

int parse_int(std::string_view tok, std::size_t at) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("invalid integer '" + std::string(tok) + "' in family spec", at);
    return value;
}

// Splits "(...)x(...)" honoring nesting.
std::pair<std::string_view, std::string_view> split_product(std::string_view args, std::size_t at) {
    if (args.empty() || args.front() != '(')
        throw ParseError("cartesian spec must look like (spec)x(spec)", at);
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == '(') ++depth;
        if (args[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    if (close == std::string_view::npos)
        throw ParseError("unbalanced parentheses in family spec", at);
    std::string_view rest = args.substr(close + 1);
    if (rest.size() < 3 || rest.front() != 'x' || rest[1] != '(' || rest.back() != ')')
        throw ParseError("cartesian spec must look like (spec)x(spec)", at + close + 1);
    return {args.substr(1, close - 1), rest.substr(2, rest.size() - 3)};
}

Graph cartesian(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    Graph out(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) {
            for (int z : h.neighbors(v))
                if (z > v) out.add_edge(u * nh + v, u * nh + z);
            for (int w : g.neighbors(u))
                if (w > u) out.add_edge(u * nh + v, w * nh + v);
        }
    return out;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

} // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    auto it = kind_names().find(name);
    if (it == kind_names().end())
        throw ParseError("unknown graph family '" + std::string(name) + "'", 0);

    FamilySpec spec;
    spec.kind = it->second;

    std::string_view args = colon == std::string_view::npos ? "" : text.substr(colon + 1);
    std::size_t args_at = colon == std::string_view::npos ? text.size() : colon + 1;

    if (spec.kind == Kind::hypercube3) {
        if (!args.empty()) throw ParseError("hypercube3 takes no parameters", args_at);
        return spec;
    }
    if (spec.kind == Kind::cartesian) {
        auto [left, right] = split_product(args, args_at);
        spec.factors.push_back(parse(left));
        spec.factors.push_back(parse(right));
        return spec;
    }
    if (args.empty()) throw ParseError("family spec is missing parameters", args_at);
    std::size_t start = 0;
    while (true) {
        auto comma = args.find(',', start);
        auto tok = args.substr(start, comma == std::string_view::npos ? comma : comma - start);
        spec.params.push_back(parse_int(tok, args_at + start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return spec;
}

bool FamilySpec::looks_like(std::string_view text) {
    auto colon = text.find(':');
    return kind_names().count(text.substr(0, colon)) > 0;
}

std::string FamilySpec::str() const {
    if (kind == Kind::hypercube3) return "hypercube3";
    if (kind == Kind::cartesian)
        return "cart:(" + factors[0].str() + ")x(" + factors[1].str() + ")";
    std::string out = kind_name(kind) + ":";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    return out;
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    const auto& p = spec.params;
    switch (spec.kind) {
        case Kind::path: {
            require(p.size() == 1 && p[0] >= 1, "path requires n >= 1");
            Graph g(p[0]);
            for (int i = 0; i + 1 < p[0]; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Kind::cycle: {
            require(p.size() == 1 && p[0] >= 3, "cycle requires n >= 3");
            Graph g(p[0]);
            for (int i = 0; i < p[0]; ++i) g.add_edge(i, (i + 1) % p[0]);
            return g;
        }
        case Kind::complete: {
            require(p.size() == 1 && p[0] >= 1, "complete requires n >= 1");
            Graph g(p[0]);
            for (int i = 0; i < p[0]; ++i)
                for (int j = i + 1; j < p[0]; ++j) g.add_edge(i, j);
            return g;
        }
        case Kind::complete_bipartite: {
            require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "kbip requires m,n >= 1");
            Graph g(p[0] + p[1]);
            for (int i = 0; i < p[0]; ++i)
                for (int j = 0; j < p[1]; ++j) g.add_edge(i, p[0] + j);
            return g;
        }
        case Kind::spider: {
            // Center is vertex 0; legs follow in order, each leg a path
            // hanging off the center. A spider's center has degree > 2.
            require(p.size() >= 3, "spider requires at least 3 legs");
            int n = 1;
            for (int leg : p) {
                require(leg >= 1, "spider legs must have >= 1 vertex");
                n += leg;
            }
            Graph g(n);
            int next = 1;
            for (int leg : p) {
                g.add_edge(0, next);
                for (int i = 1; i < leg; ++i, ++next) g.add_edge(next, next + 1);
                ++next;
            }
            return g;
        }
        case Kind::friendship: {
            require(p.size() == 1 && p[0] >= 1, "friendship requires k >= 1 triangles");
            int k = p[0];
            Graph g(2 * k + 1);
            for (int t = 0; t < k; ++t) {
                g.add_edge(0, 1 + 2 * t);
                g.add_edge(0, 2 + 2 * t);
                g.add_edge(1 + 2 * t, 2 + 2 * t);
            }
            return g;
        }
        case Kind::hypercube3: {
            FamilySpec c4{Kind::cycle, {4}, {}};
            FamilySpec p2{Kind::path, {2}, {}};
            return cartesian(generate(c4), generate(p2));
        }
        case Kind::cartesian:
            return cartesian(generate(spec.factors.at(0)), generate(spec.factors.at(1)));
    }
    throw DomainError("unhandled family kind");
}

} // namespace graphspark
