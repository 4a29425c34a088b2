#include "msr/code.hpp"

namespace msr {

CodeParameters CodeParameters::make(int n, int k) {
    if (k < 2 || k >= n)
        throw InvalidParametersError("require 2 <= k < n, got n=" + std::to_string(n) +
                                     " k=" + std::to_string(k));
    return CodeParameters{n, k};
}

void RegeneratingCode::validate() const {
    const int n = params.n;
    if (static_cast<int>(storage.size()) != n)
        throw DimensionMismatchError("expected one storage matrix per node");
    if (static_cast<int>(transmissions.size()) != n * n)
        throw DimensionMismatchError("expected transmission table of size n*n");
    for (const auto& a : storage) {
        require_same_field(a.field(), field);
        if (a.rows() != params.alpha() || a.cols() != params.total_cols())
            throw DimensionMismatchError("storage matrix has wrong shape");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& b = transmission(i, j);
            require_same_field(b.field(), field);
            if (b.rows() != 1 || b.cols() != params.alpha())
                throw DimensionMismatchError("transmission vector has wrong shape");
            if (b.is_zero()) throw InvalidParametersError("transmission vector is zero");
        }
    }
}

void SymmetricSeed::validate() const {
    require_same_field(base.field(), field);
    require_same_field(rotation.field(), field);
    if (base.rows() != params.alpha() || base.cols() != params.total_cols())
        throw DimensionMismatchError("seed base has wrong shape");
    if (rotation.rows() != params.total_cols() || rotation.cols() != params.total_cols())
        throw DimensionMismatchError("rotation has wrong shape");
    if (static_cast<int>(b.size()) != params.n - 1)
        throw DimensionMismatchError("expected n-1 transmission vectors");
    for (const auto& v : b) {
        require_same_field(v.field(), field);
        if (v.rows() != 1 || v.cols() != params.alpha())
            throw DimensionMismatchError("transmission vector has wrong shape");
        if (v.is_zero()) throw InvalidParametersError("transmission vector is zero");
    }
    const FieldMatrix eye = FieldMatrix::identity(field, params.total_cols());
    FieldMatrix power = rotation;
    for (int t = 1; t < params.n; ++t) {
        if (power == eye) throw InvalidParametersError("rotation period divides t < n");
        power = power * rotation;
    }
    if (power != eye) throw InvalidParametersError("rotation does not satisfy R^n = I");
}

FieldMatrix rotation_matrix(const FieldPtr& field, const CodeParameters& params) {
    const int d = params.total_cols();
    const int n = params.n;
    if (d < n)
        throw NoValidRotationError("no period-" + std::to_string(n) + " cycle fits in dimension " +
                                   std::to_string(d));
    FieldMatrix r(field, d, d);
    for (int i = 0; i < n; ++i) r(i, (i + 1) % n) = 1;
    for (int i = n; i < d; ++i) r(i, i) = 1;
    return r;
}

RegeneratingCode expand(const SymmetricSeed& seed) {
    const int n = seed.params.n;
    if (static_cast<int>(seed.b.size()) != n - 1)
        throw DimensionMismatchError("seed carries " + std::to_string(seed.b.size()) +
                                     " transmission vectors, expected n-1");
    RegeneratingCode code;
    code.params = seed.params;
    code.field = seed.field;
    code.storage.reserve(static_cast<std::size_t>(n));
    code.storage.push_back(seed.base);
    for (int i = 1; i < n; ++i) code.storage.push_back(code.storage.back() * seed.rotation);
    code.transmissions.assign(static_cast<std::size_t>(n) * n, FieldMatrix(seed.field, 1, seed.params.alpha()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int t = ((i - j) % n + n) % n;  // offset 1..n-1
            code.transmission(i, j) = seed.b[static_cast<std::size_t>(t - 1)];
        }
    }
    return code;
}

RegeneratingCode row_transform(const RegeneratingCode& code, const FieldMatrix& t) {
    if (t.rows() != code.params.alpha() || t.cols() != code.params.alpha())
        throw DimensionMismatchError("row transform must be alpha x alpha");
    const FieldMatrix tinv = invert(t);  // SingularError if not invertible
    RegeneratingCode out = code;
    for (auto& a : out.storage) a = t * a;
    for (int i = 0; i < code.params.n; ++i)
        for (int j = 0; j < code.params.n; ++j)
            if (i != j) out.transmission(i, j) = code.transmission(i, j) * tinv;
    return out;
}

RegeneratingCode column_transform(const RegeneratingCode& code, const FieldMatrix& t) {
    if (t.rows() != code.params.total_cols() || t.cols() != code.params.total_cols())
        throw DimensionMismatchError("column transform must be total_cols x total_cols");
    invert(t);  // existence check only; SingularError if not invertible
    RegeneratingCode out = code;
    for (auto& a : out.storage) a = a * t;
    return out;
}

SymmetricSeed column_transform(const SymmetricSeed& seed, const FieldMatrix& t) {
    if (t.rows() != seed.params.total_cols() || t.cols() != seed.params.total_cols())
        throw DimensionMismatchError("column transform must be total_cols x total_cols");
    const FieldMatrix tinv = invert(t);
    SymmetricSeed out = seed;
    out.base = seed.base * t;
    out.rotation = tinv * seed.rotation * t;
    return out;
}

std::pair<RegeneratingCode, FieldMatrix> to_systematic(const RegeneratingCode& code) {
    std::vector<FieldMatrix> first_k(code.storage.begin(), code.storage.begin() + code.params.k);
    const FieldMatrix t = invert(vstack(first_k));
    return {column_transform(code, t), t};
}

std::pair<SymmetricSeed, FieldMatrix> to_systematic(const SymmetricSeed& seed) {
    std::vector<FieldMatrix> first_k;
    FieldMatrix a = seed.base;
    for (int i = 0; i < seed.params.k; ++i) {
        first_k.push_back(a);
        a = a * seed.rotation;
    }
    const FieldMatrix t = invert(vstack(first_k));
    return {column_transform(seed, t), t};
}

RateParameters rates(int n, int k, Rational file_size) {
    CodeParameters::make(n, k);  // parameter validation
    if (file_size <= Rational(0)) throw InvalidParametersError("file size must be positive");
    RateParameters r;
    r.file_size = file_size;
    r.n = n;
    r.k = k;
    const Rational per_node = file_size / Rational(k);
    r.gamma_naive = file_size;
    r.gamma_msr = per_node * Rational(n - 1, n - k);
    r.gamma_ia = per_node * Rational(static_cast<long long>(k - 1) * (n - k) + 1, n - k);
    r.subpacket_size = file_size / Rational(static_cast<long long>(k) * (n - k));
    r.bound_achieved = (r.gamma_msr == r.gamma_ia);
    return r;
}

}  // namespace msr
