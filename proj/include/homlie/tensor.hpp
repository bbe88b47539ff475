#pragma once

#include "homlie/matrix.hpp"

namespace homlie {

// Bilinear table: t(i,j) is the image vector of (e_i, f_j), with entries
// t(i,j,k) = coefficient of g_k. Shapes: left x right inputs, out outputs.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int left, int right, int out)
        : left_(left), right_(right), out_(out),
          a_(static_cast<std::size_t>(left) * right * out) {}

    int left() const { return left_; }
    int right() const { return right_; }
    int out() const { return out_; }

    Rat& operator()(int i, int j, int k)
    {
        return a_[(static_cast<std::size_t>(i) * right_ + j) * out_ + k];
    }
    const Rat& operator()(int i, int j, int k) const
    {
        return a_[(static_cast<std::size_t>(i) * right_ + j) * out_ + k];
    }

    Vec at(int i, int j) const
    {
        Vec v(out_);
        for (int k = 0; k < out_; ++k)
            v[k] = (*this)(i, j, k);
        return v;
    }
    void set_at(int i, int j, const Vec& v)
    {
        for (int k = 0; k < out_; ++k)
            (*this)(i, j, k) = v[k];
    }

    Vec eval(const Vec& x, const Vec& y) const
    {
        Vec r(out_, Rat(0));
        for (int i = 0; i < left_; ++i) {
            if (x[i] == 0)
                continue;
            for (int j = 0; j < right_; ++j) {
                if (y[j] == 0)
                    continue;
                Rat c = x[i] * y[j];
                for (int k = 0; k < out_; ++k)
                    if ((*this)(i, j, k) != 0)
                        r[k] += c * (*this)(i, j, k);
            }
        }
        return r;
    }

    bool is_zero() const
    {
        for (const Rat& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

private:
    int left_ = 0, right_ = 0, out_ = 0;
    std::vector<Rat> a_;
};

}  // namespace homlie
