#include "drg/intersection_array.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace drg {

IntersectionArray::IntersectionArray(std::vector<int> b, std::vector<int> c)
    : b_(std::move(b)), c_(std::move(c)) {
    const int D = static_cast<int>(b_.size());
    if (D < 1) throw InvalidArray("diameter must be at least 1");
    if (c_.size() != b_.size()) throw InvalidArray("b and c sequences must have equal length");
    if (c_[0] != 1) throw InvalidArray("c1 must equal 1");
    for (int i = 0; i < D; ++i) {
        if (b_[static_cast<std::size_t>(i)] < 1)
            throw InvalidArray("b" + std::to_string(i) + " must be positive");
        if (c_[static_cast<std::size_t>(i)] < 1)
            throw InvalidArray("c" + std::to_string(i + 1) + " must be positive");
    }
    for (int i = 0; i <= D; ++i) {
        if (a(i) < 0)
            throw InvalidArray("a" + std::to_string(i) + " is negative");
    }
    // Layer sizes k_{i+1} = k_i * b_i / c_{i+1} must be integers.
    layer_.assign(static_cast<std::size_t>(D) + 1, 0);
    layer_[0] = 1;
    for (int i = 0; i < D; ++i) {
        long num = layer_[static_cast<std::size_t>(i)] * b_[static_cast<std::size_t>(i)];
        int den = c_[static_cast<std::size_t>(i)];
        if (num % den != 0)
            throw InvalidArray("layer size k" + std::to_string(i + 1) + " is not an integer");
        layer_[static_cast<std::size_t>(i) + 1] = num / den;
    }
}

int IntersectionArray::b(int i) const {
    if (i < 0 || i > diameter()) throw BadParams("intersection index out of range");
    return i == diameter() ? 0 : b_[static_cast<std::size_t>(i)];
}

int IntersectionArray::c(int i) const {
    if (i < 0 || i > diameter()) throw BadParams("intersection index out of range");
    return i == 0 ? 0 : c_[static_cast<std::size_t>(i) - 1];
}

int IntersectionArray::mu() const {
    if (diameter() < 2) throw BadParams("mu undefined for diameter < 2");
    return c(2);
}

long IntersectionArray::order() const {
    long v = 0;
    for (long s : layer_) v += s;
    return v;
}

long IntersectionArray::size() const { return order() * k() / 2; }

bool IntersectionArray::bipartite_feasible() const {
    for (int i = 0; i <= diameter(); ++i)
        if (a(i) != 0) return false;
    return true;
}

std::string IntersectionArray::to_string() const {
    std::ostringstream out;
    out << "{";
    for (int i = 0; i < diameter(); ++i) out << (i ? "," : "") << b_[static_cast<std::size_t>(i)];
    out << ";";
    for (int i = 0; i < diameter(); ++i) out << (i ? "," : "") << c_[static_cast<std::size_t>(i)];
    out << "}";
    return out.str();
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
    auto fail = [&]() -> void {
        throw ParseError("cannot parse intersection array: " + text, 1);
    };
    std::size_t open = text.find('{'), semi = text.find(';'), close = text.find('}');
    if (open == std::string::npos || semi == std::string::npos || close == std::string::npos ||
        !(open < semi && semi < close))
        fail();
    auto parse_list = [&](const std::string& part) {
        std::vector<int> out;
        std::istringstream in(part);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t pos = 0;
            int val = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) fail();
            out.push_back(val);
        }
        return out;
    };
    return IntersectionArray(parse_list(text.substr(open + 1, semi - open - 1)),
                             parse_list(text.substr(semi + 1, close - semi - 1)));
}

IntersectionArray intersection_array_of(const Graph& g, int /*threads*/) {
    const int n = g.order();
    if (n < 2) throw BadParams("intersection array requires at least 2 vertices");
    auto k = g.regular_degree();
    if (!k) throw NotRegular("graph is not regular");

    // First pass from vertex 0 proposes the array; every other root must
    // reproduce it on all pairs.
    auto d0 = bfs_distances(g, 0);
    int D = 0;
    for (int y = 0; y < n; ++y) {
        if (d0[static_cast<std::size_t>(y)] == kUnreachable)
            throw DisconnectedGraph("graph is not connected");
        D = std::max(D, d0[static_cast<std::size_t>(y)]);
    }
    std::vector<int> b(static_cast<std::size_t>(D) + 1, -1), c(static_cast<std::size_t>(D) + 1, -1);
    b[0] = *k;
    c[0] = 0;

    for (int x = 0; x < n; ++x) {
        auto dist = x == 0 ? d0 : bfs_distances(g, x);
        for (int y = 0; y < n; ++y) {
            int i = dist[static_cast<std::size_t>(y)];
            if (i == kUnreachable) throw DisconnectedGraph("graph is not connected");
            if (i > D)
                throw NotDistanceRegular("eccentricity differs between vertices " +
                                             std::to_string(x) + " and 0",
                                         x, y);
            if (i == 0) continue;
            int down = 0, up = 0;
            for (int z : g.neighbors(y)) {
                int dz = dist[static_cast<std::size_t>(z)];
                if (dz == i - 1)
                    ++down;
                else if (dz == i + 1)
                    ++up;
            }
            if (c[static_cast<std::size_t>(i)] == -1) c[static_cast<std::size_t>(i)] = down;
            if (i < D && b[static_cast<std::size_t>(i)] == -1) b[static_cast<std::size_t>(i)] = up;
            if (c[static_cast<std::size_t>(i)] != down ||
                (i < D ? b[static_cast<std::size_t>(i)] != up : up != 0)) {
                throw NotDistanceRegular(
                    "intersection numbers differ at pair (" + std::to_string(x) + "," +
                        std::to_string(y) + ") at distance " + std::to_string(i),
                    x, y);
            }
        }
    }
    b.pop_back();       // drop b_D slot
    c.erase(c.begin()); // drop c_0 slot
    return IntersectionArray(std::move(b), std::move(c));
}

std::optional<IntersectionArray> try_intersection_array(const Graph& g, int threads) {
    try {
        return intersection_array_of(g, threads);
    } catch (const NotDistanceRegular&) {
        return std::nullopt;
    }
}

bool is_taylor(const IntersectionArray& ia) {
    if (ia.diameter() != 3) return false;
    return ia.b(1) == ia.c(2) && ia.b(2) == 1 && ia.c(3) == ia.k();
}

double shadow_bound(const IntersectionArray& ia, long t_total) {
    if (ia.diameter() < 2) throw BadParams("shadow bound needs diameter >= 2");
    double v = static_cast<double>(ia.order());
    double denom = static_cast<double>(ia.mu()) * static_cast<double>(ia.k_i(2));
    return v * (1.0 - static_cast<double>(t_total) / denom);
}

double shadow_bound_profile(const IntersectionArray& ia, const std::vector<long>& t) {
    const int D = ia.diameter();
    if (static_cast<int>(t.size()) != D)
        throw BadParams("profile must have one entry per distance layer");
    // Suffix sums k_i + ... + k_D.
    std::vector<double> suffix(static_cast<std::size_t>(D) + 2, 0.0);
    for (int i = D; i >= 1; --i)
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i) + 1] + static_cast<double>(ia.k_i(i));
    double total = static_cast<double>(ia.order());
    for (int i = 1; i <= D; ++i) {
        double ci_ki = static_cast<double>(ia.c(i)) * static_cast<double>(ia.k_i(i));
        total -= static_cast<double>(t[static_cast<std::size_t>(i) - 1]) / ci_ki *
                 suffix[static_cast<std::size_t>(i)];
    }
    return total;
}

}  // namespace drg
