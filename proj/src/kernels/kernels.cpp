#include "spinsqueeze/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "kernel_impl.hpp"

namespace spinsqueeze::kernels {

namespace {

using detail::Impl;

struct Selection {
    const Impl* impl;
    Backend backend;
};

bool backend_usable(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(SPINSQUEEZE_HAVE_AVX2)
            return detail::avx2_usable();
#else
            return false;
#endif
    }
    return false;
}

const Impl* impl_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &detail::scalar_impl;
        case Backend::avx2:
#if defined(SPINSQUEEZE_HAVE_AVX2)
            return &detail::avx2_impl;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Backend initial_backend() {
    if (const char* env = std::getenv("SPINSQUEEZE_KERNEL")) {
        Backend requested;
        if (parse_backend(env, requested) && backend_usable(requested)) return requested;
        // unknown or unusable value: fall through to auto
    }
    return backend_usable(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<int>& active_slot() {
    static std::atomic<int> slot{static_cast<int>(initial_backend())};
    return slot;
}

} // namespace

const char* name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "?";
}

bool parse_backend(std::string_view text, Backend& out) {
    if (text == "scalar") {
        out = Backend::scalar;
        return true;
    }
    if (text == "avx2") {
        out = Backend::avx2;
        return true;
    }
    return false;
}

std::vector<Backend> supported() {
    std::vector<Backend> v{Backend::scalar};
    if (backend_usable(Backend::avx2)) v.push_back(Backend::avx2);
    return v;
}

Backend active() { return static_cast<Backend>(active_slot().load(std::memory_order_relaxed)); }

bool set_backend(Backend b) {
    if (!backend_usable(b)) return false;
    active_slot().store(static_cast<int>(b), std::memory_order_relaxed);
    return true;
}

void bond_trig(std::span<const double> couplings, double half_t, std::span<double> c,
               std::span<double> s) {
    if (c.size() < couplings.size() || s.size() < couplings.size()) {
        throw std::invalid_argument("bond_trig: output spans too small");
    }
    const Impl* impl = impl_for(active());
    impl->bond_trig(couplings.data(), couplings.size(), half_t, c.data(), s.data());
}

ChainSums chain_sums(std::span<const double> couplings, double t) {
    const std::size_t n = couplings.size();
    if (n == 0) return {};
    const Impl* impl = impl_for(active());

    thread_local std::vector<double> cbuf, sbuf;
    cbuf.resize(n + 3);
    sbuf.resize(n + 3);
    impl->bond_trig(couplings.data(), n, 0.5 * t, cbuf.data(), sbuf.data());
    for (std::size_t k = 0; k < 3; ++k) {
        cbuf[n + k] = cbuf[k % n];
        sbuf[n + k] = sbuf[k % n];
    }
    return impl->windowed(cbuf.data(), sbuf.data(), n);
}

} // namespace spinsqueeze::kernels
