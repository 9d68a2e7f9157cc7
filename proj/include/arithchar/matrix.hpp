#pragma once

#include "arithchar/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace arithchar {

/// Dense row-major matrix over an exact ring or field.
///
/// Elements only need +, -, * and (for det/inverse) /. Zero and one are
/// produced as T(0) and T(1), so element types must be constructible from int.
template <class T> class Matrix
{
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols, T(0))
	{}
	Matrix(std::vector<std::vector<T>> const &rows)
	{
		rows_ = rows.size();
		cols_ = rows.empty() ? 0 : rows[0].size();
		data_.reserve(rows_ * cols_);
		for (auto const &r : rows)
		{
			if (r.size() != cols_)
				throw Error(ErrorCode::DimensionMismatch,
				            "ragged matrix rows");
			data_.insert(data_.end(), r.begin(), r.end());
		}
	}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = T(1);
		return m;
	}

	static Matrix diagonal(std::vector<T> const &d)
	{
		Matrix m(d.size(), d.size());
		for (std::size_t i = 0; i < d.size(); ++i)
			m(i, i) = d[i];
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool square() const { return rows_ == cols_; }

	T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	T const &operator()(std::size_t i, std::size_t j) const
	{
		return data_[i * cols_ + j];
	}

	std::vector<T> row(std::size_t i) const
	{
		return std::vector<T>(data_.begin() + i * cols_,
		                      data_.begin() + (i + 1) * cols_);
	}

	std::vector<T> column(std::size_t j) const
	{
		std::vector<T> c;
		c.reserve(rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			c.push_back((*this)(i, j));
		return c;
	}

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				t(j, i) = (*this)(i, j);
		return t;
	}

	bool is_zero() const
	{
		for (auto const &x : data_)
			if (!(x == T(0)))
				return false;
		return true;
	}

	friend bool operator==(Matrix const &a, Matrix const &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

	Matrix &operator+=(Matrix const &b)
	{
		require_same_shape(b);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] += b.data_[k];
		return *this;
	}
	Matrix &operator-=(Matrix const &b)
	{
		require_same_shape(b);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] -= b.data_[k];
		return *this;
	}
	Matrix &operator*=(T const &s)
	{
		for (auto &x : data_)
			x *= s;
		return *this;
	}

	friend Matrix operator+(Matrix a, Matrix const &b) { return a += b; }
	friend Matrix operator-(Matrix a, Matrix const &b) { return a -= b; }
	friend Matrix operator*(Matrix a, T const &s) { return a *= s; }
	friend Matrix operator*(T const &s, Matrix a) { return a *= s; }

	friend Matrix operator*(Matrix const &a, Matrix const &b)
	{
		if (a.cols_ != b.rows_)
			throw Error(ErrorCode::DimensionMismatch,
			            "matrix product shape mismatch");
		Matrix c(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
			{
				if (a(i, k) == T(0))
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					c(i, j) += a(i, k) * b(k, j);
			}
		return c;
	}

	friend std::vector<T> operator*(Matrix const &a, std::vector<T> const &v)
	{
		if (a.cols_ != v.size())
			throw Error(ErrorCode::DimensionMismatch,
			            "matrix-vector shape mismatch");
		std::vector<T> r(a.rows_, T(0));
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t j = 0; j < a.cols_; ++j)
				r[i] += a(i, j) * v[j];
		return r;
	}

	Matrix pow(unsigned e) const
	{
		require_square();
		Matrix r = identity(rows_);
		for (unsigned i = 0; i < e; ++i)
			r = r * (*this);
		return r;
	}

	/// Determinant by Gaussian elimination (requires exact division).
	T det() const
	{
		require_square();
		Matrix m = *this;
		T d(1);
		for (std::size_t c = 0; c < rows_; ++c)
		{
			std::size_t piv = c;
			while (piv < rows_ && m(piv, c) == T(0))
				++piv;
			if (piv == rows_)
				return T(0);
			if (piv != c)
			{
				m.swap_rows(piv, c);
				d = -d;
			}
			d *= m(c, c);
			for (std::size_t r = c + 1; r < rows_; ++r)
			{
				if (m(r, c) == T(0))
					continue;
				T f = m(r, c) / m(c, c);
				for (std::size_t k = c; k < cols_; ++k)
					m(r, k) -= f * m(c, k);
			}
		}
		return d;
	}

	/// Inverse by Gauss-Jordan; throws Error(SingularMatrix).
	Matrix inverse() const
	{
		require_square();
		std::size_t const n = rows_;
		Matrix m = *this;
		Matrix inv = identity(n);
		for (std::size_t c = 0; c < n; ++c)
		{
			std::size_t piv = c;
			while (piv < n && m(piv, c) == T(0))
				++piv;
			if (piv == n)
				throw Error(ErrorCode::SingularMatrix, "matrix is singular");
			m.swap_rows(piv, c);
			inv.swap_rows(piv, c);
			T p = m(c, c);
			for (std::size_t k = 0; k < n; ++k)
			{
				m(c, k) /= p;
				inv(c, k) /= p;
			}
			for (std::size_t r = 0; r < n; ++r)
			{
				if (r == c || m(r, c) == T(0))
					continue;
				T f = m(r, c);
				for (std::size_t k = 0; k < n; ++k)
				{
					m(r, k) -= f * m(c, k);
					inv(r, k) -= f * inv(c, k);
				}
			}
		}
		return inv;
	}

	void swap_rows(std::size_t a, std::size_t b)
	{
		if (a == b)
			return;
		for (std::size_t k = 0; k < cols_; ++k)
			std::swap((*this)(a, k), (*this)(b, k));
	}

	std::vector<T> const &data() const { return data_; }

  private:
	void require_square() const
	{
		if (!square())
			throw Error(ErrorCode::NonSquare, "matrix is not square");
	}
	void require_same_shape(Matrix const &b) const
	{
		if (rows_ != b.rows_ || cols_ != b.cols_)
			throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
	}

	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<T> data_;
};

/// Coefficients of det(lambda*I - A), highest degree first (monic).
///
/// Berkowitz' algorithm: division free, so integral entries give integral
/// coefficients and entries in an ideal L give the coefficient of
/// lambda^{n-k} in L^k.
template <class T> std::vector<T> char_poly(Matrix<T> const &a)
{
	if (!a.square())
		throw Error(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
	std::size_t const n = a.rows();
	if (n == 0)
		return {T(1)};
	std::vector<T> poly = {T(1), -a(0, 0)};
	for (std::size_t r = 1; r < n; ++r)
	{
		// Toeplitz column (1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S)
		std::vector<T> col(r + 2, T(0));
		col[0] = T(1);
		col[1] = -a(r, r);
		std::vector<T> v(r);
		for (std::size_t i = 0; i < r; ++i)
			v[i] = a(i, r);
		for (std::size_t k = 0; k < r; ++k)
		{
			T s(0);
			for (std::size_t j = 0; j < r; ++j)
				s += a(r, j) * v[j];
			col[k + 2] = -s;
			std::vector<T> w(r, T(0));
			for (std::size_t i = 0; i < r; ++i)
				for (std::size_t j = 0; j < r; ++j)
					w[i] += a(i, j) * v[j];
			v = std::move(w);
		}
		std::vector<T> next(r + 2, T(0));
		for (std::size_t i = 0; i < r + 2; ++i)
			for (std::size_t j = 0; j <= std::min(i, r); ++j)
				next[i] += col[i - j] * poly[j];
		poly = std::move(next);
	}
	return poly;
}

} // namespace arithchar
