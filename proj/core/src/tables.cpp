#include "supervar/tables.hpp"

#include <algorithm>

#include "supervar/errors.hpp"

namespace supervar {

namespace {

void check_params(Family f, const std::vector<int>& params) {
  switch (f) {
    case Family::GL:
    case Family::SL:
    case Family::OSP:
      if (params.size() != 2) throw InvalidParams("need two parameters");
      return;
    case Family::PSL:
    case Family::P:
    case Family::Q:
    case Family::QHAT:
      if (params.empty()) throw InvalidParams("need a parameter");
      return;
    case Family::SUB:
      throw UnknownFamily("no table data for SUB algebras");
  }
}

}  // namespace

std::pair<int, int> table3_dims(Family f, const std::vector<int>& params) {
  check_params(f, params);
  switch (f) {
    case Family::GL: {
      int m = params[0], n = params[1];
      return {m * m + n * n, 2 * m * n};
    }
    case Family::SL: {
      int m = params[0], n = params[1];
      return {m * m + n * n - 1, 2 * m * n};
    }
    case Family::PSL: {
      int n = params[0];
      return {2 * n * n - 2, 2 * n * n};
    }
    case Family::OSP: {
      int M = params[0], N = params[1];
      if (M % 2 == 1) {
        int m = M / 2, n = N / 2;
        return {2 * m * m + m + 2 * n * n + n, (2 * m + 1) * (2 * n)};
      }
      int m = M / 2, n = N / 2;
      return {2 * m * m - m + 2 * n * n + n, 4 * m * n};
    }
    case Family::P: {
      int n = params[0];
      return {n * n - 1, n * n};
    }
    case Family::QHAT: {
      int n = params[0];
      return {n * n, n * n};
    }
    case Family::Q: {
      int n = params[0];
      return {n * n - 1, n * n - 1};
    }
    default:
      throw UnknownFamily("no table data");
  }
}

std::vector<int> table1_degrees(Family f, const std::vector<int>& params) {
  check_params(f, params);
  std::vector<int> d;
  switch (f) {
    case Family::GL:
    case Family::SL: {
      int r = std::min(params[0], params[1]);
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    }
    case Family::PSL: {
      int n = params[0];
      for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
      d.push_back(n);
      d.push_back(n);
      break;
    }
    case Family::OSP: {
      int M = params[0], N = params[1];
      int m = M / 2, n = N / 2;
      if (M % 2 == 1) {
        int r = std::min(m, n);
        for (int i = 1; i <= r; ++i) d.push_back(4 * i);
      } else if (m > n) {
        for (int i = 1; i <= n; ++i) d.push_back(4 * i);
      } else {
        for (int i = 1; i <= m - 1; ++i) d.push_back(4 * i);
        d.push_back(2 * m);
      }
      break;
    }
    case Family::P: {
      int n = params[0];
      if (n % 2 == 1) {
        int l = (n - 1) / 2;
        for (int i = 1; i <= l; ++i) d.push_back(4 * i);
        d.push_back(n);
      } else {
        int l = n / 2;
        for (int i = 1; i <= l - 1; ++i) d.push_back(4 * i);
        d.push_back(l);
        d.push_back(n);
      }
      break;
    }
    case Family::QHAT: {
      for (int i = 1; i <= params[0]; ++i) d.push_back(i);
      break;
    }
    case Family::Q: {
      for (int i = 2; i <= params[0]; ++i) d.push_back(i);
      break;
    }
    default:
      throw UnknownFamily("no table data");
  }
  std::sort(d.begin(), d.end());
  return d;
}

int krull_dimension(Family f, const std::vector<int>& params) {
  return static_cast<int>(table1_degrees(f, params).size());
}

int table4_centralizer_dim(Family f, const std::vector<int>& params) {
  check_params(f, params);
  switch (f) {
    case Family::GL: {
      int m = params[0], n = params[1];
      int r = std::min(m, n), k = n - m;
      return r + k * k;
    }
    case Family::SL: {
      int m = params[0], n = params[1];
      int r = std::min(m, n), k = n - m;
      return r + k * k - 1;
    }
    case Family::PSL:
      return params[0] - 1;
    case Family::OSP: {
      int M = params[0], N = params[1];
      int m = M / 2, n = N / 2;
      int r = std::min(m, n);
      if (M % 2 == 1) {
        int k = std::abs(m - n);
        return r + 2 * k * k + k;  // SO_{2k+1} when m >= n, Sp_{2k} when m < n
      }
      if (m > n) {
        int k = m - n;
        return r + 2 * k * k - k;  // SO_{2k}
      }
      int k = n - m;
      return r + 2 * k * k + k;  // Sp_{2k}
    }
    case Family::P:
      return params[0] / 2;
    case Family::QHAT:
      return params[0];
    case Family::Q:
      return params[0] - 1;
    default:
      throw UnknownFamily("no table data");
  }
}

bool table5_polar(Family f, const std::vector<int>& params) {
  check_params(f, params);
  return f != Family::PSL && f != Family::P;
}

bool table5_stable(Family f, const std::vector<int>& params) {
  check_params(f, params);
  if (f == Family::OSP && params[0] % 2 == 1 && params[0] / 2 < params[1] / 2)
    return false;  // osp(2m+1|2n) with m < n
  return true;
}

std::vector<Vec> table2_omega(Family f, const std::vector<int>& params) {
  check_params(f, params);
  std::vector<Vec> omega;
  auto diff = [](int len, int i, int j) {
    Vec w = zero_vec(len);
    w[i] += 1;
    w[j] -= 1;
    return w;
  };
  switch (f) {
    case Family::GL:
    case Family::SL: {
      int m = params[0], n = params[1];
      int r = std::min(m, n);
      for (int i = 0; i < r; ++i) omega.push_back(diff(m + n, i, m + i));
      break;
    }
    case Family::PSL: {
      int n = params[0];
      for (int i = 0; i < n; ++i) omega.push_back(diff(2 * n, i, n + i));
      break;
    }
    case Family::OSP: {
      int m = params[0] / 2, n = params[1] / 2;
      int r = std::min(m, n);
      for (int i = 0; i < r; ++i) omega.push_back(diff(m + n, i, m + i));
      break;
    }
    case Family::P: {
      int n = params[0];
      int top = (n + 1) / 2;  // includes the middle root 2*eps when n is odd
      for (int i = 0; i < top; ++i) {
        Vec w = zero_vec(n);
        w[i] += 1;
        w[n - 1 - i] += 1;
        omega.push_back(w);
      }
      break;
    }
    case Family::Q:
    case Family::QHAT:
      break;  // diagonal construction, no root set
    default:
      throw UnknownFamily("no table data");
  }
  return omega;
}

}  // namespace supervar
