#include "lanemd/particles/ParticleBuffer.h"

#include <algorithm>

namespace lanemd {

std::string_view toString(Ownership ownership) {
  switch (ownership) {
    case Ownership::owned:
      return "owned";
    case Ownership::halo:
      return "halo";
    case Ownership::dummy:
      return "dummy";
  }
  return "unknown";
}

namespace {
template <class F>
void forEachArray(ParticleBuffer &b, F &&f) {
  f(b.posX), f(b.posY), f(b.posZ);
  f(b.velX), f(b.velY), f(b.velZ);
  f(b.forceX), f(b.forceY), f(b.forceZ);
  f(b.oldForceX), f(b.oldForceY), f(b.oldForceZ);
  f(b.id);
  f(b.ownership);
}
}  // namespace

void ParticleBuffer::reserve(std::size_t n) {
  forEachArray(*this, [n](auto &v) { v.reserve(n); });
}

void ParticleBuffer::clear() {
  forEachArray(*this, [](auto &v) { v.clear(); });
}

void ParticleBuffer::resize(std::size_t n) {
  forEachArray(*this, [n](auto &v) { v.resize(n); });
}

void ParticleBuffer::push_back(const Particle &p) {
  posX.push_back(p.position[0]);
  posY.push_back(p.position[1]);
  posZ.push_back(p.position[2]);
  velX.push_back(p.velocity[0]);
  velY.push_back(p.velocity[1]);
  velZ.push_back(p.velocity[2]);
  forceX.push_back(p.force[0]);
  forceY.push_back(p.force[1]);
  forceZ.push_back(p.force[2]);
  oldForceX.push_back(p.oldForce[0]);
  oldForceY.push_back(p.oldForce[1]);
  oldForceZ.push_back(p.oldForce[2]);
  id.push_back(p.id);
  ownership.push_back(p.ownership);
}

Particle ParticleBuffer::particle(std::size_t k) const {
  Particle p;
  p.id = id[k];
  p.position = position(k);
  p.velocity = velocity(k);
  p.force = force(k);
  p.oldForce = {oldForceX[k], oldForceY[k], oldForceZ[k]};
  p.ownership = ownership[k];
  return p;
}

void ParticleBuffer::setParticle(std::size_t k, const Particle &p) {
  id[k] = p.id;
  setPosition(k, p.position);
  setVelocity(k, p.velocity);
  setForce(k, p.force);
  oldForceX[k] = p.oldForce[0];
  oldForceY[k] = p.oldForce[1];
  oldForceZ[k] = p.oldForce[2];
  ownership[k] = p.ownership;
}

void ParticleBuffer::zeroForces() {
  std::fill(forceX.begin(), forceX.end(), 0.);
  std::fill(forceY.begin(), forceY.end(), 0.);
  std::fill(forceZ.begin(), forceZ.end(), 0.);
}

bool ParticleBuffer::consistent() const noexcept {
  const auto n = posX.size();
  bool ok = true;
  forEachArray(const_cast<ParticleBuffer &>(*this), [&](const auto &v) { ok = ok and v.size() == n; });
  return ok;
}

ParticleBuffer soaFromParticles(std::span<const Particle> particles) {
  ParticleBuffer buffer;
  buffer.reserve(particles.size());
  for (const auto &p : particles) {
    buffer.push_back(p);
  }
  return buffer;
}

std::vector<Particle> particlesFromSoa(const ParticleBuffer &buffer) {
  std::vector<Particle> particles;
  particles.reserve(buffer.size());
  for (std::size_t k = 0; k < buffer.size(); ++k) {
    particles.push_back(buffer.particle(k));
  }
  return particles;
}

}  // namespace lanemd
