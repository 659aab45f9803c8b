#include "cubevol/straighten.hpp"

#include <boost/container_hash/hash.hpp>

namespace cubevol::hyp {

SingularCube::SingularCube(int dim, std::vector<HPoint> lifts, std::uint64_t tag)
    : dim_(dim), lifts_(std::move(lifts)), tag_(tag), root_(tag)
{
    require(dim_ >= 0 && dim_ < 31, "cube dimension out of range");
    require(lifts_.size() == (std::size_t{1} << dim_), "singular k-cube needs 2^k vertex lifts");
    for (int k = 0; k < dim_; ++k)
        free_.push_back(k);
}

SingularCube SingularCube::face(int j, int i) const
{
    require(dim_ >= 1 && j >= 1 && j <= dim_ && (i == 0 || i == 1), "face pattern out of range");
    std::vector<HPoint> lifts(std::size_t{1} << (dim_ - 1));
    for (std::uint32_t b = 0; b < lifts.size(); ++b)
        lifts[b] = lifts_[chains::insert_bit(b, j, i)];
    SingularCube f(dim_ - 1, std::move(lifts), root_);
    f.root_ = root_;
    const int coordinate = free_[j - 1];
    f.frozen_ = frozen_ | (1u << coordinate);
    f.values_ = values_ | (static_cast<std::uint32_t>(i) << coordinate);
    f.free_ = free_;
    f.free_.erase(f.free_.begin() + (j - 1));
    std::size_t seed = root_;
    boost::hash_combine(seed, f.frozen_);
    boost::hash_combine(seed, f.values_);
    f.tag_ = seed;
    return f;
}

bool operator<(const SingularCube& a, const SingularCube& b)
{
    if (a.tag_ != b.tag_)
        return a.tag_ < b.tag_;
    return StraightCube(a.dim_, a.lifts_) < StraightCube(b.dim_, b.lifts_);
}

StraightCube straighten(const SingularCube& c)
{
    return StraightCube(c.dim(), c.lifts());
}

StraightChain straighten(const SingularChain& z)
{
    StraightChain out(z.dim());
    for (const auto& [c, coeff] : z)
        out.add(straighten(c), coeff);
    return out;
}

SingularCube as_singular(const StraightCube& c, std::uint64_t tag)
{
    return SingularCube(c.dim(), c.vertices(), tag);
}

}   // namespace cubevol::hyp
