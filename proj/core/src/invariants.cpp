#include "knotweed/invariants.hpp"

#include <cstdint>
#include <queue>
#include <sstream>

namespace knotweed {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    std::size_t low = 0;
    while (low < coeffs_.size() && coeffs_[low] == 0)
        ++low;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(low));
    if (!coeffs_.empty() && coeffs_.back() < 0)
        for (auto& c : coeffs_)
            c = -c;
}

BigInt IntPoly::evaluate(const BigInt& t) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::string IntPoly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream s;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const BigInt& c = coeffs_[e];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            s << (c < 0 ? "-" : "");
        else
            s << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || e == 0)
            s << mag;
        if (e >= 1)
            s << "t";
        if (e >= 2)
            s << "^" << e;
    }
    return s.str();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

int writhe(const Diagram& d)
{
    int w = 0;
    for (CrossingId c = 0; c < d.crossing_count(); ++c)
        w += d.sign(c);
    return w;
}

namespace {

void require_knot(const Diagram& d)
{
    if (d.component_count() != 1)
        throw MultiComponentError("invariant needs a single-component diagram, got " +
                                  std::to_string(d.component_count()) + " components");
}

BigInt bareiss(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 p)
{
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 v)
{
    if (v < 2)
        return false;
    for (u64 small : {2, 3, 5, 7})
        if (v % small == 0)
            return v == small;
    u64 dd = v - 1;
    int r = 0;
    while ((dd & 1) == 0) {
        dd >>= 1;
        ++r;
    }
    // Bases 2, 3, 5, 7 decide primality below 3.2e9.
    for (u64 a : {2, 3, 5, 7}) {
        u64 x = pow_mod(a, dd, v);
        if (x == 1 || x == v - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r && composite; ++i) {
            x = x * x % v;
            composite = x != v - 1;
        }
        if (composite)
            return false;
    }
    return true;
}

// Primes just below 2^31, so products of residues fit in 64 bits.
const std::vector<u64>& crt_primes()
{
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        for (u64 cand = (1ULL << 31) - 1; out.size() < 512; cand -= 2)
            if (is_prime(cand))
                out.push_back(cand);
        return out;
    }();
    return primes;
}

struct Row {
    // entry = a + b*t at column col
    std::vector<std::tuple<int, long, long>> terms;
};

u64 det_mod(std::vector<std::vector<u64>>& m, u64 p)
{
    const std::size_t n = m.size();
    u64 det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && m[r][k] == 0)
            ++r;
        if (r == n)
            return 0;
        if (r != k) {
            std::swap(m[r], m[k]);
            det = (p - det) % p;
        }
        det = det * m[k][k] % p;
        u64 inv = inv_mod(m[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            u64 f = m[i][k] * inv % p;
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[k][j]) % p;
        }
    }
    return det;
}

// Coefficients (mod p) of the polynomial taking values ys at xs.
std::vector<u64> interpolate(const std::vector<u64>& xs, std::vector<u64> ys, u64 p)
{
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            u64 num = (ys[i] + p - ys[i - 1]) % p;
            u64 den = (xs[i] + p - xs[i - j]) % p;
            ys[i] = num * inv_mod(den, p) % p;
            if (i == j)
                break;
        }
    std::vector<u64> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs = coeffs * (t - xs[k]) + ys[k]
        for (std::size_t i = n - 1; i > 0; --i)
            coeffs[i] = (coeffs[i - 1] + (p - xs[k]) * coeffs[i] % p) % p;
        coeffs[0] = ((p - xs[k]) * coeffs[0] % p + ys[k]) % p;
    }
    return coeffs;
}

} // namespace

BigInt determinant(const Diagram& d)
{
    require_knot(d);
    if (d.crossing_count() == 0)
        return 1;
    auto fm = face_map(d);
    auto g = dual_graph(d, fm);
    std::vector<int> color(fm.face_count(), -1);
    std::queue<FaceId> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        FaceId f = q.front();
        q.pop();
        for (int e : g.incident[f]) {
            FaceId o = g.other_end(e, f);
            if (color[o] < 0) {
                color[o] = 1 - color[f];
                q.push(o);
            } else if (color[o] == color[f]) {
                throw EmbeddingError("faces do not admit a checkerboard colouring");
            }
        }
    }
    int counts[2] = {0, 0};
    for (int c : color)
        ++counts[c];
    const int shaded = counts[1] < counts[0] ? 1 : 0;
    std::vector<int> index(fm.face_count(), -1);
    int m = 0;
    for (FaceId f = 0; f < fm.face_count(); ++f)
        if (color[f] == shaded)
            index[f] = m++;
    std::vector<std::vector<long>> gm(m, std::vector<long>(m, 0));
    for (CrossingId c = 0; c < d.crossing_count(); ++c) {
        int t = color[fm.face_of[make_dart(c, 0)]] == shaded ? 0 : 1;
        int i = index[fm.face_of[make_dart(c, t)]];
        int j = index[fm.face_of[make_dart(c, t + 2)]];
        if (i == j)
            continue;
        long eta = (t & 1) ? 1 : -1;
        gm[i][j] -= eta;
        gm[j][i] -= eta;
        gm[i][i] += eta;
        gm[j][j] += eta;
    }
    std::vector<std::vector<BigInt>> minor(m - 1, std::vector<BigInt>(m - 1));
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j)
            minor[i][j] = gm[i][j];
    BigInt det = bareiss(std::move(minor));
    return det < 0 ? BigInt(-det) : det;
}

IntPoly alexander(const Diagram& d)
{
    require_knot(d);
    const int n = d.crossing_count();
    if (n <= 1)
        return IntPoly::one();

    // Wirtinger arcs run from one under-crossing to the next.
    std::vector<int> arc_of(d.dart_count(), -1);
    const auto cyc = d.strand_cycles().front();
    std::size_t start = 0;
    while (slot_of(cyc[start]) != 2)
        ++start;
    int arc = -1;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        DartId e = cyc[(start + k) % cyc.size()];
        if (slot_of(e) == 2)
            ++arc;
        arc_of[e] = arc;
    }
    std::vector<Row> rows(n);
    for (CrossingId c = 0; c < n; ++c) {
        int over = arc_of[d.edge_of(make_dart(c, 1))];
        int in = arc_of[d.edge_of(make_dart(c, 0))];
        int out = arc_of[make_dart(c, 2)];
        auto& r = rows[c].terms;
        r.emplace_back(over, 1, -1);
        if (d.sign(c) > 0) {
            r.emplace_back(in, 0, 1);
            r.emplace_back(out, -1, 0);
        } else {
            r.emplace_back(in, -1, 0);
            r.emplace_back(out, 0, 1);
        }
    }

    const int size = n - 1;
    // |coefficients| <= 4^size; the primes must cover twice that.
    BigInt bound = BigInt(1) << (2 * size + 1);
    const auto& primes = crt_primes();
    std::size_t prime_count = 0;
    for (BigInt prod = 1; prod <= bound; ++prime_count) {
        if (prime_count == primes.size())
            throw DiagramError("diagram too large for the Alexander computation");
        prod *= primes[prime_count];
    }

    std::vector<u64> xs(size + 1);
    for (int i = 0; i <= size; ++i)
        xs[i] = static_cast<u64>(i + 2);
    std::vector<BigInt> value(size + 1, 0);
    BigInt modulus = 1;
    std::vector<std::vector<u64>> m(size, std::vector<u64>(size));
    for (std::size_t pi = 0; pi < prime_count; ++pi) {
        const u64 p = primes[pi];
        std::vector<u64> ys(size + 1);
        for (int k = 0; k <= size; ++k) {
            for (auto& row : m)
                std::fill(row.begin(), row.end(), 0);
            const u64 t = xs[k] % p;
            for (int r = 0; r < size; ++r)
                for (auto [col, a, b] : rows[r].terms) {
                    if (col >= size)
                        continue;
                    long long v = a + b * static_cast<long long>(t);
                    u64 vm = static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                              static_cast<long long>(p));
                    m[r][col] = (m[r][col] + vm) % p;
                }
            ys[k] = det_mod(m, p);
        }
        auto coeffs = interpolate(xs, ys, p);
        // Chinese remaindering into the running values.
        const u64 mod_p = static_cast<u64>(modulus % p);
        const u64 inv = inv_mod(mod_p, p);
        for (int i = 0; i <= size; ++i) {
            u64 cur = static_cast<u64>(value[i] % p);
            u64 diff = (coeffs[i] + p - cur) % p * inv % p;
            value[i] += modulus * diff;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& v : value)
        if (v > half)
            v -= modulus;
    return IntPoly(std::move(value));
}

} // namespace knotweed
