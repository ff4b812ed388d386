#include "gcanon/homology.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "gcanon/chain.hpp"
#include "json.hpp"

namespace gcanon {

namespace {

std::vector<std::vector<Int>> boundary_matrix(const StratumBasis& src, const StratumBasis& dst,
                                              bool deletion) {
    std::vector<std::vector<Int>> m(dst.basis.size(), std::vector<Int>(src.basis.size(), 0));
    for (size_t s = 0; s < src.basis.size(); s++) {
        GraphChain chain = deletion ? differential_delta(src.basis[s]) : differential_d(src.basis[s]);
        for (auto& [key, entry] : chain.terms()) {
            auto it = std::lower_bound(dst.keys.begin(), dst.keys.end(), key);
            if (it == dst.keys.end() || *it != key) {
                // Every surviving term must be a basis element of the
                // target stratum.
                throw std::logic_error("boundary term missing from target stratum basis");
            }
            size_t t = size_t(it - dst.keys.begin());
            if (entry.coeff.get_den() != 1)
                throw std::logic_error("boundary coefficient not integral");
            m[t][s] = entry.coeff.get_num();
        }
    }
    return m;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (unsigned __int128)a * b % p;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<std::vector<Int>> boundary_matrix_d(const StratumBasis& src, const StratumBasis& dst) {
    return boundary_matrix(src, dst, false);
}

std::vector<std::vector<Int>> boundary_matrix_delta(const StratumBasis& src,
                                                    const StratumBasis& dst) {
    return boundary_matrix(src, dst, true);
}

long rank_mod_p(const std::vector<std::vector<Int>>& m, uint64_t p) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(cols));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) {
            Int r = m[i][j] % Int(long(p));
            if (r < 0) r += long(p);
            a[i][j] = r.get_ui();
        }
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; col++) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        uint64_t inv = powmod(a[row][col], p - 2, p);
        for (size_t j = col; j < cols; j++) a[row][j] = mulmod(a[row][j], inv, p);
        for (size_t i = 0; i < rows; i++) {
            if (i == row || a[i][col] == 0) continue;
            uint64_t f = a[i][col];
            for (size_t j = col; j < cols; j++) {
                uint64_t sub = mulmod(f, a[row][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        row++;
        rank++;
    }
    return rank;
}

long rank_exact(const std::vector<std::vector<Int>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) a[i][j] = Rat(m[i][j]);
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; col++) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < rows; i++) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (size_t j = col; j < cols; j++) a[i][j] -= f * a[row][j];
        }
        row++;
        rank++;
    }
    return rank;
}

HomologyReport homology_dimensions(int hmax, const std::string& cache_dir, bool verbose) {
    HomologyReport rep;
    rep.hmax = hmax;
    for (int h = 1; h <= hmax; h++) {
        int emin = stratum_min_edges(h), emax = stratum_max_edges(h);
        std::map<int, StratumBasis> strata;
        for (int e = emin; e <= emax; e++) {
            strata[e] = generate_stratum(h, e, cache_dir);
            rep.stratum_dim[h][e] = long(strata[e].basis.size());
            if (verbose)
                std::cerr << "stratum h=" << h << " e=" << e << ": " << strata[e].basis.size()
                          << " generators (of " << strata[e].generated << " classes)\n";
        }
        for (int e = emin; e <= emax + 1; e++) {
            const StratumBasis* src = strata.count(e) ? &strata[e] : nullptr;
            const StratumBasis* dst = strata.count(e - 1) ? &strata[e - 1] : nullptr;
            long rank = 0;
            if (src && dst && !src->basis.empty() && !dst->basis.empty()) {
                auto m = boundary_matrix_d(*src, *dst);
                long r1 = rank_mod_p(m, kPrime61);
                long r2 = rank_mod_p(m, kPrime31);
                long r3 = rank_exact(m);
                if (r1 != r3 || r2 > r3)
                    throw std::logic_error("rank mismatch between prime field and exact");
                rank = r3;
            }
            rep.rank_d[h][e] = rank;
        }
        for (int e = emin; e <= emax; e++) {
            long dim = rep.stratum_dim[h][e];
            if (dim == 0 && e - 2 * h < 0) continue;
            long out_rank = rep.rank_d[h][e];
            long in_rank = rep.rank_d[h].count(e + 1) ? rep.rank_d[h][e + 1] : 0;
            rep.homology[h][e - 2 * h] = dim - out_rank - in_rank;
        }
    }
    return rep;
}

std::string HomologyReport::table_text() const {
    int nmax = 0;
    for (auto& [h, row] : homology)
        for (auto& [n, d] : row) nmax = std::max(nmax, n);
    std::ostringstream os;
    for (int n = nmax; n >= 0; n--) {
        os << "H_" << n << " |";
        for (int h = 1; h <= hmax; h++) {
            auto ith = homology.find(h);
            bool present = ith != homology.end() && ith->second.count(n);
            os << " ";
            if (present)
                os << ith->second.at(n);
            else
                os << ".";
        }
        os << "\n";
    }
    os << "----+";
    for (int h = 1; h <= hmax; h++) os << "--";
    os << "\n h  |";
    for (int h = 1; h <= hmax; h++) os << " " << h % 10;
    os << "\n";
    return os.str();
}

std::string HomologyReport::to_json() const {
    nlohmann::json j;
    j["hmax"] = hmax;
    for (auto& [h, row] : homology)
        for (auto& [n, d] : row) j["homology"][std::to_string(h)][std::to_string(n)] = d;
    for (auto& [h, row] : stratum_dim)
        for (auto& [e, d] : row) j["stratum_dim"][std::to_string(h)][std::to_string(e)] = d;
    for (auto& [h, row] : rank_d)
        for (auto& [e, d] : row) j["rank_d"][std::to_string(h)][std::to_string(e)] = d;
    return j.dump(2);
}

}  // namespace gcanon
