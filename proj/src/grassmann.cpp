#include "fano/grassmann.hpp"

#include <algorithm>

namespace fano {

Chart::Chart(int k, int n, std::vector<int> pivots) : k_(k), n_(n), pivots_(std::move(pivots)) {
    if (k < 0 || k >= n)
        throw Error(ErrorCode::InvalidRange, "need 0 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (static_cast<int>(pivots_.size()) != k + 1)
        throw Error(ErrorCode::InvalidRange, "chart needs exactly k+1 pivot columns");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (pivots_[i] < 0 || pivots_[i] > n || (i > 0 && pivots_[i] <= pivots_[i - 1]))
            throw Error(ErrorCode::InvalidRange, "pivots must be strictly increasing within 0..n");
    }
    for (int c = 0; c <= n; ++c)
        if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_columns_.push_back(c);
}

Chart Chart::standard(int k, int n) {
    std::vector<int> pivots(static_cast<std::size_t>(std::max(k + 1, 0)));
    for (int a = 0; a <= k; ++a) pivots[static_cast<std::size_t>(a)] = a;
    return Chart(k, n, std::move(pivots));
}

std::string Chart::variable_name(int a, int j) const {
    return "x_{" + std::to_string(a) + "," + std::to_string(free_columns_.at(static_cast<std::size_t>(j))) + "}";
}

std::vector<std::string> Chart::variable_names() const {
    std::vector<std::string> names;
    for (int a = 0; a < rows(); ++a)
        for (int j = 0; j < cols(); ++j) names.push_back(variable_name(a, j));
    return names;
}

BigInt gaussian_count(int k, int n, std::uint64_t q) {
    if (k < 0 || k >= n) throw Error(ErrorCode::InvalidRange, "need 0 <= k < n");
    if (!is_prime(q)) throw Error(ErrorCode::InvalidField, std::to_string(q) + " is not prime");
    // prod_{i=0}^{k} (q^{n+1-i} - 1) / (q^{i+1} - 1)
    BigInt num = 1;
    BigInt den = 1;
    const BigInt Q(static_cast<unsigned long>(q));
    for (int i = 0; i <= k; ++i) {
        BigInt a;
        BigInt b;
        mpz_pow_ui(a.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n + 1 - i));
        mpz_pow_ui(b.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(i + 1));
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

std::vector<std::vector<int>> pivot_sets_colex(int k, int n) {
    if (k < 0 || k >= n) throw Error(ErrorCode::InvalidRange, "need 0 <= k < n");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k + 1));
    for (int a = 0; a <= k; ++a) cur[static_cast<std::size_t>(a)] = a;
    // Colex successor: bump the lowest position that can move, reset those below it.
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i <= k) {
            const int limit = i == k ? n : cur[static_cast<std::size_t>(i + 1)] - 1;
            if (cur[static_cast<std::size_t>(i)] < limit) break;
            ++i;
        }
        if (i > k) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = j;
    }
    return out;
}

std::vector<PivotBlock> pivot_blocks(int k, int n, std::uint32_t q) {
    std::vector<PivotBlock> blocks;
    for (auto& pivots : pivot_sets_colex(k, n)) {
        Chart chart(k, n, pivots);
        PivotBlock block{chart, {}, 1};
        for (int a = 0; a < chart.rows(); ++a) {
            for (int j = 0; j < chart.cols(); ++j) {
                if (chart.free_columns()[static_cast<std::size_t>(j)] > pivots[static_cast<std::size_t>(a)])
                    block.free_positions.emplace_back(a, j);
            }
        }
        for (std::size_t i = 0; i < block.free_positions.size(); ++i) {
            if (block.plane_count > (std::uint64_t{1} << 62) / q)
                throw Error(ErrorCode::InvalidRange, "plane enumeration too large to index");
            block.plane_count *= q;
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

PlaneCoords<Fp> plane_at(const PivotBlock& block, std::uint64_t index, const FieldSpec& field) {
    if (index >= block.plane_count) throw Error(ErrorCode::IndexOutOfRange, "plane index " + std::to_string(index));
    PlaneCoords<Fp> plane = PlaneCoords<Fp>::origin(block.chart, field);
    const std::uint64_t q = field.modulus();
    for (std::size_t i = block.free_positions.size(); i-- > 0;) {
        const auto [a, j] = block.free_positions[i];
        plane.entries(a, j) = Fp(static_cast<std::int64_t>(index % q), field.modulus());
        index /= q;
    }
    return plane;
}

std::vector<PlaneCoords<Fp>> enumerate_planes(int k, int n, std::uint32_t q) {
    std::vector<PlaneCoords<Fp>> out;
    for_each_plane(k, n, q, [&](PlaneCoords<Fp> p) { out.push_back(std::move(p)); });
    return out;
}

} // namespace fano
