#pragma once

#include <cmath>
#include <complex>

namespace hk {

// Neumaier's variant of Kahan summation; also tracks sum of |terms|
// so callers can bound the rounding error of the total.
template <class T>
class Accumulator {
public:
    Accumulator() = default;
    explicit Accumulator(T init) { add(init); }

    void add(T x) {
        using std::abs;
        T t = sum_ + x;
        if (abs(sum_) >= abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        mag_ += abs(x);
    }
    Accumulator& operator+=(T x) {
        add(x);
        return *this;
    }
    Accumulator& operator-=(T x) {
        add(-x);
        return *this;
    }

    T value() const { return sum_ + comp_; }
    T magnitude() const { return mag_; }

private:
    T sum_{0};
    T comp_{0};
    T mag_{0};
};

template <class T>
class Accumulator<std::complex<T>> {
public:
    Accumulator() = default;
    explicit Accumulator(const std::complex<T>& init) { add(init); }

    void add(const std::complex<T>& x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    Accumulator& operator+=(const std::complex<T>& x) {
        add(x);
        return *this;
    }
    Accumulator& operator-=(const std::complex<T>& x) {
        add(-x);
        return *this;
    }

    std::complex<T> value() const { return {re_.value(), im_.value()}; }
    T magnitude() const { return re_.magnitude() + im_.magnitude(); }

private:
    Accumulator<T> re_;
    Accumulator<T> im_;
};

}  // namespace hk
