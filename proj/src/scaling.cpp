#include "gs/scaling.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "gs/detail/family_tables.hpp"
#include "gs/error.hpp"

namespace gs {

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "haar", "db2", "db3", "db4", "db5", "db6", "db7", "db8"};

}  // namespace

Family family_from_string(std::string_view name) {
    for (size_t i = 0; i < kNames.size(); ++i) {
        if (name == kNames[i]) return static_cast<Family>(i);
    }
    if (name == "db1") return Family::haar;
    throw DomainError("unsupported family: " + std::string(name));
}

std::string_view family_name(Family f) { return kNames[static_cast<size_t>(f)]; }

ScalingFamily ScalingFamily::make(Family f) {
    int p = (f == Family::haar) ? 1 : static_cast<int>(f) + 1;
    const detail::FamilyTable* table = detail::family_table(p);
    if (table == nullptr) throw DomainError("unsupported family");
    ScalingFamily fam;
    fam.name = f;
    fam.p = p;
    fam.filter.assign(table->filter, table->filter + 2 * p);
    return fam;
}

std::vector<double> filter_coefficients(Family f) { return ScalingFamily::make(f).filter; }

const BoundaryFilterSet& boundary_filters(Family f, Side side) {
    if (f == Family::haar) {
        throw DomainError("haar has no boundary corrections (p = 1)");
    }
    static std::mutex mutex;
    static std::array<std::array<BoundaryFilterSet, 2>, 7> cache;  // p = 2..8
    static std::array<std::array<bool, 2>, 7> ready = {};

    int p = static_cast<int>(f) + 1;
    size_t pi = static_cast<size_t>(p - 2);
    size_t si = (side == Side::left) ? 0 : 1;

    std::lock_guard<std::mutex> lock(mutex);
    if (!ready[pi][si]) {
        const detail::FamilyTable* table = detail::family_table(p);
        const double* H = (side == Side::left) ? table->left_H : table->right_H;
        const double* h = (side == Side::left) ? table->left_h : table->right_h;
        const double* seed = (side == Side::left) ? table->left_seed : table->right_seed;
        BoundaryFilterSet& set = cache[pi][si];
        set.side = side;
        set.p = p;
        set.H = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                               Eigen::RowMajor>>(H, p, p);
        set.h = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                               Eigen::RowMajor>>(h, p, 2 * p - 1);
        set.integer_values =
            Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                           Eigen::RowMajor>>(seed, p, 2 * p);
        set.U = set.H / std::sqrt(2.0);
        set.V = set.h / std::sqrt(2.0);
        ready[pi][si] = true;
    }
    return cache[pi][si];
}

}  // namespace gs
