#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include <omp.h>

namespace colldecay {

/// serial is the reference path; openmp must produce identical results.
enum class Execution { serial, openmp };

/// results[i] = f(i) for i in [0, n). Results are stored by index, so the
/// output order never depends on scheduling. An exception thrown for any
/// index is rethrown after the loop (lowest index wins).
template <class F>
auto map_indexed(std::size_t n, F&& f, Execution exec = Execution::openmp)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using T = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);

    auto run_one = [&](std::size_t i) {
        try {
            slots[i].emplace(f(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    if (exec == Execution::openmp) {
        const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) run_one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) run_one(i);
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace colldecay
