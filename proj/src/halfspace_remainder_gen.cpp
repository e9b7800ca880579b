// Generated by scripts/gen_halfspace_kernel.py -- do not edit by hand.
//
// Half-space image correction R of the elastic Neumann tensor N0 = Gamma + R
// (Mindlin point-force image system, traction-free surface at x3 = 0).
// Index order: out[(i*3+j)*...] with i the displacement component, j the
// force direction, then the derivative indices as documented per function.

#include "dislo/halfspace_remainder_gen.hpp"

#include <cmath>

namespace dislo::gen {

void halfspace_remainder_value(const double* xf, const double* ys, double mu, double nu, double* out) {
  const double x1 = xf[0], x2 = xf[1], x3 = xf[2];
  const double y1 = ys[0], y2 = ys[1], y3 = ys[2];
  const double x0 = x3 + y3;
  const double x4 = pow(x0, 2);
  const double x5 = x1 - y1;
  const double x6 = pow(x5, 2);
  const double x7 = x2 - y2;
  const double x8 = pow(x7, 2);
  const double x9 = x4 + x6 + x8;
  const double x10 = sqrt(x9);
  const double x11 = 1.0/x10;
  const double x12 = -x11;
  const double x13 = 4*nu - 3;
  const double x14 = pow(x9, -3.0/2.0);
  const double x15 = x13*x14;
  const double x16 = 1.0/x9;
  const double x17 = 3*x16;
  const double x18 = x3*y3;
  const double x19 = 2*x18;
  const double x20 = x14*x19;
  const double x21 = x0 - x10;
  const double x22 = -x11/x21;
  const double x23 = nu - 1;
  const double x24 = 4*x23*(2*nu - 1);
  const double x25 = x24/x21;
  const double x26 = (1.0/16.0)/(M_PI*mu*x23);
  const double x27 = 6*x18/pow(x9, 2);
  const double x28 = x13*x16;
  const double x29 = x11*x26;
  const double x30 = -x29*x5*x7*(x27 + x28 + x24/pow(x21, 2));
  const double x31 = x0*x27;
  const double x32 = x28*(x3 - y3);
  const double x33 = x29*(x25 - x31 + x32);
  const double x34 = x29*(-x25 + x31 + x32);
  out[0] = -x26*(x12 + x15*x6 + x20*(x17*x6 - 1) - x25*(x22*x6 - 1));
  out[1] = x30;
  out[2] = -x33*x5;
  out[3] = x30;
  out[4] = -x26*(x12 + x15*x8 + x20*(x17*x8 - 1) - x25*(x22*x8 - 1));
  out[5] = -x33*x7;
  out[6] = -x34*x5;
  out[7] = -x34*x7;
  out[8] = x29*(x13 - x16*(x13*x4 + x19) + 8*pow(x23, 2) + x27*x4);
}

// out[(i*3+j)*3+l] = d R_ij / d y_l
void halfspace_remainder_dy(const double* xf, const double* ys, double mu, double nu, double* out) {
  const double x1 = xf[0], x2 = xf[1], x3 = xf[2];
  const double y1 = ys[0], y2 = ys[1], y3 = ys[2];
  const double x0 = x1 - y1;
  const double x4 = x3 + y3;
  const double x5 = pow(x4, 2);
  const double x6 = pow(x0, 2);
  const double x7 = x2 - y2;
  const double x8 = pow(x7, 2);
  const double x9 = x5 + x6 + x8;
  const double x10 = pow(x9, -3.0/2.0);
  const double x11 = x0*x10;
  const double x12 = 4*nu - 3;
  const double x13 = 2*x12;
  const double x14 = pow(x0, 3);
  const double x15 = pow(x9, -5.0/2.0);
  const double x16 = 3*x15;
  const double x17 = x12*x16;
  const double x18 = 1.0/x9;
  const double x19 = x15*y3;
  const double x20 = 12*x3;
  const double x21 = x19*x20;
  const double x22 = 3*x18;
  const double x23 = x22*x6 - 1;
  const double x24 = 6*x3;
  const double x25 = x19*x24;
  const double x26 = x23*x25;
  const double x27 = sqrt(x9);
  const double x28 = -x27 + x4;
  const double x29 = -x28;
  const double x30 = 1.0/x29;
  const double x31 = 1.0/x27;
  const double x32 = x31*x6;
  const double x33 = nu - 1;
  const double x34 = 2*nu - 1;
  const double x35 = 4*x33*x34;
  const double x36 = x35/pow(x28, 2);
  const double x37 = x31*x36;
  const double x38 = x37*(x30*x32 - 1);
  const double x39 = -x0;
  const double x40 = 2*x31;
  const double x41 = x18*x30;
  const double x42 = 1.0/x28;
  const double x43 = x35*x42;
  const double x44 = x30*x43;
  const double x45 = (1.0/16.0)/(M_PI*mu*x33);
  const double x46 = -x10;
  const double x47 = y3/pow(x9, 7.0/2.0);
  const double x48 = x20*x47;
  const double x49 = x48*x6;
  const double x50 = x17*x6;
  const double x51 = x18*x42;
  const double x52 = x36*(x10 - x51);
  const double x53 = x45*x7;
  const double x54 = -x10*x4;
  const double x55 = 2*x3;
  const double x56 = x10*x55;
  const double x57 = x31*x4 - 1;
  const double x58 = x36*x57;
  const double x59 = x18*x4;
  const double x60 = x36*(-x42*x57 + x59);
  const double x61 = pow(x9, -2);
  const double x62 = x24*x61;
  const double x63 = x62*y3;
  const double x64 = -x12;
  const double x65 = x33*x34;
  const double x66 = 4*x65/pow(x29, 2);
  const double x67 = -x31*(-x18*x64 + x63 + x66);
  const double x68 = 30*x3;
  const double x69 = x47*x68;
  const double x70 = x16*x64;
  const double x71 = 8*x18*x65/pow(x29, 3);
  const double x72 = x53*(-x0*(x0*x69 - x0*x70 + x11*x66 - x39*x71) - x67);
  const double x73 = -x7;
  const double x74 = x10*x7;
  const double x75 = x0*x45;
  const double x76 = x75*(-x67 - x7*(x66*x74 + x69*x7 - x7*x70 - x71*x73));
  const double x77 = x68*y3;
  const double x78 = x77/pow(x9, 3);
  const double x79 = 3*x12*x4*x61;
  const double x80 = x0*x53;
  const double x81 = -x31*x80*(6*x3*x61 - x36*x59 - x4*x78 - x79 + 8*x33*x34*x57/pow(x28, 3));
  const double x82 = x4*x63;
  const double x83 = x3 - y3;
  const double x84 = x12*x18;
  const double x85 = x83*x84;
  const double x86 = -x31*(x43 - x82 + x85);
  const double x87 = x17*x83;
  const double x88 = -4*x10*x33*x34*x42 + x18*x36 + x4*x69;
  const double x89 = -x87 + x88;
  const double x90 = -x89;
  const double x91 = x80*x89;
  const double x92 = x4*x62;
  const double x93 = x5*x78;
  const double x94 = x35*x4*x51;
  const double x95 = x79*x83 + x84;
  const double x96 = x31*(-x58 + x63 + x92 - x93 + x94 + x95);
  const double x97 = x48*x8;
  const double x98 = x17*x8;
  const double x99 = x22*x8 - 1;
  const double x100 = x25*x99;
  const double x101 = x31*x8;
  const double x102 = x37*(x101*x30 - 1);
  const double x103 = pow(x7, 3);
  const double x104 = x31*(-x43 + x82 + x85);
  const double x105 = -x87 - x88;
  const double x106 = x105*x80;
  const double x107 = x31*(x58 - x63 - x92 + x93 - x94 + x95);
  const double x108 = x55*y3;
  const double x109 = x12 + 8*pow(x33, 2);
  const double x110 = x45*(x109 - x22*(x108 + x12*x5) + x5*x61*x77);
  out[0] = -x45*(x0*x26 + x0*x38 - x11*x13 - x11 + x14*x17 + x21*(-x1 + x14*x18 + y1) - x44*(x10*x14 + x39*x40 - x39*x41*x6));
  out[1] = -x53*(x26 + x38 + x46 + x49 + x50 + x52*x6);
  out[2] = x45*(-x23*x56 + x26*x4 + x32*x60 + x4*x49 + x4*x50 + x54 - x58*(x32*x42 + 1));
  out[3] = x72;
  out[4] = x76;
  out[5] = x81;
  out[6] = x45*(-x6*x90 - x86);
  out[7] = x91;
  out[8] = x75*x96;
  out[9] = x72;
  out[10] = x76;
  out[11] = x81;
  out[12] = -x75*(x100 + x102 + x46 + x52*x8 + x97 + x98);
  out[13] = -x45*(x100*x7 + x102*x7 + x103*x17 - x13*x74 + x21*(x103*x18 - x2 + y2) - x44*(x10*x103 + x40*x73 - x41*x73*x8) - x74);
  out[14] = x45*(x100*x4 + x101*x60 + x4*x97 + x4*x98 + x54 - x56*x99 - x58*(x101*x42 + 1));
  out[15] = x91;
  out[16] = x45*(-x8*x90 - x86);
  out[17] = x53*x96;
  out[18] = x45*(x104 + x105*x6);
  out[19] = x106;
  out[20] = x107*x75;
  out[21] = x106;
  out[22] = x45*(x104 + x105*x8);
  out[23] = x107*x53;
  out[24] = x11*x110;
  out[25] = x110*x74;
  out[26] = -x10*x45*(x109*x4 - x18*x24*x5 - x20*x59*y3 + 30*x3*pow(x4, 3)*x61*y3 + 2*x3 - 2*x4*x64 - 3*x59*(x108 - x5*x64));
}

// out[(i*3+j)*3+m] = d R_ij / d x_m
void halfspace_remainder_dx(const double* xf, const double* ys, double mu, double nu, double* out) {
  const double x1 = xf[0], x2 = xf[1], x3 = xf[2];
  const double y1 = ys[0], y2 = ys[1], y3 = ys[2];
  const double x0 = 4*nu - 3;
  const double x4 = x1 - y1;
  const double x5 = pow(x4, 2);
  const double x6 = x3 + y3;
  const double x7 = pow(x6, 2);
  const double x8 = x2 - y2;
  const double x9 = pow(x8, 2);
  const double x10 = x5 + x7 + x9;
  const double x11 = pow(x10, -5.0/2.0);
  const double x12 = 1.0/x10;
  const double x13 = x12*x5;
  const double x14 = 3*x13 - 1;
  const double x15 = nu - 1;
  const double x16 = 2*nu - 1;
  const double x17 = sqrt(x10);
  const double x18 = -x17 + x6;
  const double x19 = pow(x18, -2);
  const double x20 = 1.0/x17;
  const double x21 = 2*x20;
  const double x22 = pow(x10, -3.0/2.0);
  const double x23 = 1.0/x18;
  const double x24 = x11*x3;
  const double x25 = 12*y3;
  const double x26 = x24*x25;
  const double x27 = x20*x23;
  const double x28 = x27*x5 + 1;
  const double x29 = 4*x15*x16;
  const double x30 = x19*x29;
  const double x31 = x20*x30;
  const double x32 = x28*x31;
  const double x33 = 2*x0*x22 + x22;
  const double x34 = (1.0/16.0)/(M_PI*mu*x15);
  const double x35 = x34*x4;
  const double x36 = -x22;
  const double x37 = x3/pow(x10, 7.0/2.0);
  const double x38 = x25*x37;
  const double x39 = x38*x5;
  const double x40 = 3*x11;
  const double x41 = x0*x40;
  const double x42 = x41*x5;
  const double x43 = 6*y3;
  const double x44 = x24*x43;
  const double x45 = x14*x44;
  const double x46 = x12*x23;
  const double x47 = x30*(x22 - x46);
  const double x48 = x34*x8;
  const double x49 = -x22*x6;
  const double x50 = 2*y3;
  const double x51 = x22*x50;
  const double x52 = x20*x6 - 1;
  const double x53 = x30*x52;
  const double x54 = x12*x6;
  const double x55 = x31*(-x23*x52 + x54);
  const double x56 = pow(x10, -2);
  const double x57 = x43*x56;
  const double x58 = x3*x57;
  const double x59 = -x0;
  const double x60 = -x18;
  const double x61 = x15*x16;
  const double x62 = 4*x61/pow(x60, 2);
  const double x63 = x20*(-x12*x59 + x58 + x62);
  const double x64 = -x4;
  const double x65 = 30*y3;
  const double x66 = x37*x65;
  const double x67 = x40*x59;
  const double x68 = x22*x62;
  const double x69 = 8*x12*x61/pow(x60, 3);
  const double x70 = -x48*(x4*(-x4*x69 + x64*x66 - x64*x67 + x64*x68) + x63);
  const double x71 = -x8;
  const double x72 = -x35*(x63 + x8*(x66*x71 - x67*x71 + x68*x71 - x69*x8));
  const double x73 = x3*x65;
  const double x74 = x73/pow(x10, 3);
  const double x75 = 3*x0*x56*x6;
  const double x76 = x35*x8;
  const double x77 = -x20*x76*(8*x15*x16*x52/pow(x18, 3) - x30*x54 + 6*x56*y3 - x6*x74 - x75);
  const double x78 = x58*x6;
  const double x79 = x3 - y3;
  const double x80 = x0*x12;
  const double x81 = x79*x80;
  const double x82 = x23*x29;
  const double x83 = x20*(-x78 + x81 + x82);
  const double x84 = x41*x79;
  const double x85 = x12*x30 - x22*x82 + x6*x66;
  const double x86 = -x84 + x85;
  const double x87 = -x76*x86;
  const double x88 = x75*x79;
  const double x89 = x29*x46*x6 - x53 + x57*x6 + x58 - x7*x74;
  const double x90 = x20*(-x80 + x88 + x89);
  const double x91 = x38*x9;
  const double x92 = x41*x9;
  const double x93 = x12*x9;
  const double x94 = 3*x93 - 1;
  const double x95 = x44*x94;
  const double x96 = x27*x9 + 1;
  const double x97 = x31*x96;
  const double x98 = -x20*(x78 + x81 - x82);
  const double x99 = x84 + x85;
  const double x100 = x76*x99;
  const double x101 = x20*(x80 - x88 + x89);
  const double x102 = 3*x3*x50 - 3*x59*x7;
  const double x103 = x0 + 8*pow(x15, 2);
  const double x104 = x22*(-x102*x12 + x103 + x56*x7*x73);
  out[0] = x35*(3*x0*x11*x5 + 6*x11*x14*x3*y3 + 4*x15*x16*x19*(-x13*x23 - x21 + x22*x5) - x26*(1 - x13) - x32 - x33);
  out[1] = x48*(-x32 + x36 + x39 + x42 + x45 + x47*x5);
  out[2] = x34*(-x14*x51 - x28*x53 + x39*x6 + x42*x6 + x45*x6 + x49 + x5*x55);
  out[3] = x70;
  out[4] = x72;
  out[5] = x77;
  out[6] = -x34*(x5*x86 + x83);
  out[7] = x87;
  out[8] = x35*x90;
  out[9] = x70;
  out[10] = x72;
  out[11] = x77;
  out[12] = x35*(x36 + x47*x9 + x91 + x92 + x95 - x97);
  out[13] = x48*(3*x0*x11*x9 + 6*x11*x3*x94*y3 + 4*x15*x16*x19*(-x21 + x22*x9 - x46*x9) - x26*(1 - x93) - x33 - x97);
  out[14] = x34*(x49 - x51*x94 - x53*x96 + x55*x9 + x6*x91 + x6*x92 + x6*x95);
  out[15] = x87;
  out[16] = -x34*(x83 + x86*x9);
  out[17] = x48*x90;
  out[18] = x34*(x5*x99 + x98);
  out[19] = x100;
  out[20] = -x101*x35;
  out[21] = x100;
  out[22] = x34*(x9*x99 + x98);
  out[23] = -x101*x48;
  out[24] = -x104*x35;
  out[25] = -x104*x48;
  out[26] = -x22*x34*(-x102*x54 + x103*x6 - x12*x43*x7 - x25*x3*x54 + 30*x3*x56*pow(x6, 3)*y3 - 2*x59*x6 + 2*y3);
}

// out[((i*3+j)*3+l)*3+m] = d^2 R_ij / (d y_l d x_m)
void halfspace_remainder_dydx(const double* xf, const double* ys, double mu, double nu, double* out) {
  const double x1 = xf[0], x2 = xf[1], x3 = xf[2];
  const double y1 = ys[0], y2 = ys[1], y3 = ys[2];
  const double x0 = x1 - y1;
  const double x4 = pow(x0, 2);
  const double x5 = x3 + y3;
  const double x6 = pow(x5, 2);
  const double x7 = x2 - y2;
  const double x8 = pow(x7, 2);
  const double x9 = x4 + x6 + x8;
  const double x10 = pow(x9, -5.0/2.0);
  const double x11 = 3*x10;
  const double x12 = x11*x4;
  const double x13 = 4*nu - 3;
  const double x14 = pow(x0, 4);
  const double x15 = pow(x9, -7.0/2.0);
  const double x16 = 15*x4;
  const double x17 = x10*x13;
  const double x18 = sqrt(x9);
  const double x19 = 1.0/x18;
  const double x20 = 2*x19;
  const double x21 = pow(x9, -3.0/2.0);
  const double x22 = -x18 + x5;
  const double x23 = 1.0/x22;
  const double x24 = 1.0/x9;
  const double x25 = x24*x4;
  const double x26 = pow(x22, -2);
  const double x27 = 2*x21;
  const double x28 = x26*x27;
  const double x29 = pow(x9, -2);
  const double x30 = nu - 1;
  const double x31 = 2*nu - 1;
  const double x32 = x30*x31;
  const double x33 = x26*x32;
  const double x34 = 4*x33;
  const double x35 = 3*x25;
  const double x36 = x35 - 1;
  const double x37 = 6*x10;
  const double x38 = x3*x37;
  const double x39 = x36*x38;
  const double x40 = x39*y3;
  const double x41 = 4*x29;
  const double x42 = 12*x10;
  const double x43 = x3*y3;
  const double x44 = x42*x43;
  const double x45 = x19*x23;
  const double x46 = x4*x45 + 1;
  const double x47 = x19*x34;
  const double x48 = x46*x47;
  const double x49 = x25 - 1;
  const double x50 = x15*y3;
  const double x51 = x3*x50;
  const double x52 = 36*x51;
  const double x53 = -x49*x52;
  const double x54 = pow(x22, -3);
  const double x55 = x20 - x21*x4 + x23*x25;
  const double x56 = x32*x54;
  const double x57 = 4*x56;
  const double x58 = x4*x57;
  const double x59 = x19*x58;
  const double x60 = x21*x4;
  const double x61 = -x21;
  const double x62 = -2*x13*x21 + x61;
  const double x63 = 1/(M_PI*mu*x30);
  const double x64 = (1.0/16.0)*x63;
  const double x65 = x49*x52;
  const double x66 = x43/pow(x9, 9.0/2.0);
  const double x67 = x4*x66;
  const double x68 = 84*x67;
  const double x69 = 24*x51;
  const double x70 = -x11 - x13*x37;
  const double x71 = -x69 + x70;
  const double x72 = x13*x15;
  const double x73 = x16*x72;
  const double x74 = x23*x24;
  const double x75 = -x27 + 2*x74;
  const double x76 = x23*x29;
  const double x77 = 3*x76;
  const double x78 = 2*x26;
  const double x79 = x12 - x4*x77 + x60*x78;
  const double x80 = 30*x15;
  const double x81 = x80*y3;
  const double x82 = x3*x81;
  const double x83 = x36*x82;
  const double x84 = x21*x34;
  const double x85 = x46*x84;
  const double x86 = x55*x57;
  const double x87 = 8*x32;
  const double x88 = x54*x87;
  const double x89 = x24*x88;
  const double x90 = x21 - x74;
  const double x91 = x19*x86 + x34*(x75 + x79) + x46*x89 - x59*x90 + x73 + x83 - x85;
  const double x92 = x0*x64;
  const double x93 = x7*x92;
  const double x94 = x42*x49;
  const double x95 = x37*y3;
  const double x96 = x36*x95;
  const double x97 = x5*x69;
  const double x98 = x11*x5;
  const double x99 = x13*x5;
  const double x100 = -x37*x99 - x98;
  const double x101 = x100 - x97;
  const double x102 = x19*x5 - 1;
  const double x103 = x102*x23;
  const double x104 = 2*x5;
  const double x105 = x104*x76;
  const double x106 = 2*x25;
  const double x107 = x102*x26;
  const double x108 = x27*x5;
  const double x109 = x103*x20 - x108;
  const double x110 = x15*x16;
  const double x111 = x110*x99;
  const double x112 = x5*x83;
  const double x113 = x24*x5;
  const double x114 = -x103 + x113;
  const double x115 = x114*x57;
  const double x116 = x115*x25;
  const double x117 = x5*x85;
  const double x118 = x102*x88;
  const double x119 = x118*x19;
  const double x120 = x119*x46;
  const double x121 = x102*x86 + x111 + x112 - x116 - x117 + x120 + x34*(-x103*x60 - x105*x4 + x106*x107 + x109 + x12*x5) + x5*x65;
  const double x122 = x106 - 1;
  const double x123 = 36*x67;
  const double x124 = x11*x8;
  const double x125 = x61 + x74;
  const double x126 = x124 + x28*x8 - x77*x8;
  const double x127 = x34*x4;
  const double x128 = x24*x8;
  const double x129 = x4*x8;
  const double x130 = 120*x129*x66 - 8*x19*x30*x31*x4*x54*x8*x90 + x21 + x73*x8;
  const double x131 = 12*x50;
  const double x132 = x131*x4;
  const double x133 = 120*x67;
  const double x134 = x133*x5;
  const double x135 = x102*x90;
  const double x136 = x102*x24;
  const double x137 = -x103*x21 - x105 + x136*x78 + x98;
  const double x138 = x64*x7;
  const double x139 = 12*x4;
  const double x140 = x15*x3;
  const double x141 = x139*x140;
  const double x142 = -x102*x90;
  const double x143 = -x102;
  const double x144 = -x22;
  const double x145 = 1.0/x144;
  const double x146 = x143*x145;
  const double x147 = x57*(x113 - x146);
  const double x148 = -x7;
  const double x149 = x104*x145*x29;
  const double x150 = x146*x21;
  const double x151 = 2*x143*x24/pow(x144, 2);
  const double x152 = x13*x6;
  const double x153 = pow(x102, 2);
  const double x154 = x153*x88;
  const double x155 = x24*x6;
  const double x156 = x155 - 1;
  const double x157 = 3*x10*x6 - x103*x108 + 2*x153*x19*x26 - x156*x74 - x21;
  const double x158 = x114*x119;
  const double x159 = x11*x6 + x61;
  const double x160 = 5*x72;
  const double x161 = 70*x66;
  const double x162 = x29*x88;
  const double x163 = x10*x34;
  const double x164 = pow(x22, -4);
  const double x165 = x164*x87;
  const double x166 = x11*x13;
  const double x167 = -x166;
  const double x168 = -x82;
  const double x169 = x167 + x168 - x84 + x89;
  const double x170 = (3.0/16.0)*x0*x63;
  const double x171 = x170*x7;
  const double x172 = x171*(x160*x4 + x161*x4 - x162*x4 + x163*x4 + x165*x60 + x169);
  const double x173 = x13*x24;
  const double x174 = 6*x29;
  const double x175 = x174*y3;
  const double x176 = x175*x3;
  const double x177 = x173 + x176;
  const double x178 = x166 + x82;
  const double x179 = x178 + x84;
  const double x180 = x179 - x89;
  const double x181 = x64*(3*x129*(x160 + x161 - x162 + x163 + x165*x21) - x180*x4 - x180*x8 + x19*(x177 + x34));
  const double x182 = 3*x29*x99;
  const double x183 = x43/pow(x9, 3);
  const double x184 = 30*x183;
  const double x185 = x113*x34 - x118 + x182 + x184*x5;
  const double x186 = -x19*(-x175 + x185);
  const double x187 = 210*x66;
  const double x188 = x187*x5;
  const double x189 = 15*x15;
  const double x190 = x189*x99;
  const double x191 = 16*x5*x56;
  const double x192 = x33*x42;
  const double x193 = 24*x164*x32;
  const double x194 = -x118*x21 + x136*x193 + x188 + x190 - x191*x29 + x192*x5;
  const double x195 = x194 - x81;
  const double x196 = x138*(x186 + x195*x4);
  const double x197 = x21*x8;
  const double x198 = x171*(x160*x8 + x161*x8 - x162*x8 + x163*x8 + x165*x197 + x169);
  const double x199 = x92*(x186 + x195*x8);
  const double x200 = x174*x3;
  const double x201 = -x19*(x185 - x200);
  const double x202 = x3*x80;
  const double x203 = x194 - x202;
  const double x204 = -x138*(x201 + x203*x4);
  const double x205 = -x92*(x201 + x203*x8);
  const double x206 = x202*x5;
  const double x207 = x152*x189;
  const double x208 = x102*x21;
  const double x209 = x187*x6;
  const double x210 = -x209;
  const double x211 = x210 + x5*x81;
  const double x212 = x93*(-x153*x19*x193 + x156*x89 + x179 + x191*x208 - x192*x6 + x206 - x207 + x211 - x37);
  const double x213 = x3 - y3;
  const double x214 = 9*x17*x213;
  const double x215 = x23*x32;
  const double x216 = x21*x215;
  const double x217 = 12*x24;
  const double x218 = 90*x5*x51;
  const double x219 = -12*x216 + x217*x33 + x218;
  const double x220 = -x214 + x219;
  const double x221 = x213*x73;
  const double x222 = x29*x33;
  const double x223 = x215*x42;
  const double x224 = -x139*x222 + x223*x4 - 210*x5*x67 + x60*x88;
  const double x225 = x221 + x224;
  const double x226 = 15*x72;
  const double x227 = x213*x226;
  const double x228 = x21*x88;
  const double x229 = 12*x222;
  const double x230 = -x188 + x223 + x227 + x228 - x229;
  const double x231 = x166*x213;
  const double x232 = -x231;
  const double x233 = 4*x216;
  const double x234 = x24*x34;
  const double x235 = x5*x82;
  const double x236 = -x233 + x234 + x235;
  const double x237 = x232 + x236;
  const double x238 = -x138*(-x230*x4 - x237);
  const double x239 = x175*x5;
  const double x240 = x184*x6;
  const double x241 = -x240;
  const double x242 = x102*x34;
  const double x243 = -x242;
  const double x244 = x182*x213;
  const double x245 = 4*x32*x5*x74;
  const double x246 = x241 + x243 + x244 + x245;
  const double x247 = -x19*(-x173 + x176 + x239 + x246);
  const double x248 = x190*x213;
  const double x249 = 8*x5;
  const double x250 = x222*x249;
  const double x251 = -x250;
  const double x252 = x102*x84;
  const double x253 = -x252;
  const double x254 = x136*x88;
  const double x255 = x223*x5;
  const double x256 = x248 + x251 + x253 + x254 + x255;
  const double x257 = x167 + x211 + x256 + x82;
  const double x258 = x227*x8;
  const double x259 = -x188*x8 + x197*x88 + x223*x8 - x229*x8;
  const double x260 = x258 + x259;
  const double x261 = x257*x93;
  const double x262 = x200*x5;
  const double x263 = -x19*(x177 + x246 + x262);
  const double x264 = x178 + x206 + x210 + x256;
  const double x265 = -x264*x93;
  const double x266 = x207*x213;
  const double x267 = pow(x5, 3);
  const double x268 = -x154*x19 + x156*x234 + x187*x267 - x202*x6 + x208*x249*x33 - x218 - x223*x6 + x233 + x37*x5 + x38 - x6*x81 + x95;
  const double x269 = x231 - x266 + x268;
  const double x270 = 3*x128;
  const double x271 = x270 - 1;
  const double x272 = x271*x38;
  const double x273 = x272*y3;
  const double x274 = x34*x8;
  const double x275 = x45*x8 + 1;
  const double x276 = x275*x47;
  const double x277 = x271*x82;
  const double x278 = x128 - 1;
  const double x279 = -x278*x52;
  const double x280 = 2*x128;
  const double x281 = x280 - 1;
  const double x282 = x66*x8;
  const double x283 = 36*x282;
  const double x284 = x275*x84;
  const double x285 = x74*x8;
  const double x286 = -x197 + x20 + x285;
  const double x287 = x286*x57;
  const double x288 = x57*x8;
  const double x289 = x19*x287 - x19*x288*x90 + x226*x8 + x275*x89 + x277 - x284 + x34*(x126 + x75);
  const double x290 = x131*x8;
  const double x291 = 120*x282;
  const double x292 = x291*x5;
  const double x293 = x190*x8;
  const double x294 = x271*x95;
  const double x295 = x235*x271;
  const double x296 = x284*x5;
  const double x297 = x119*x275;
  const double x298 = x115*x128;
  const double x299 = x278*x52;
  const double x300 = 84*x282;
  const double x301 = pow(x7, 4);
  const double x302 = 15*x8;
  const double x303 = x278*x42;
  const double x304 = x102*x287 + x293 + x295 - x296 + x297 - x298 + x299*x5 + x34*(-x103*x197 - x105*x8 + x107*x280 + x109 + x8*x98);
  const double x305 = 12*x8;
  const double x306 = x140*x305;
  const double x307 = -x0;
  const double x308 = -x92*(-x230*x8 - x237);
  const double x309 = -x221 + x224;
  const double x310 = x214 + x219;
  const double x311 = x188 - x223 + x227 - x228 + x229;
  const double x312 = x231 + x236;
  const double x313 = -x138*(-x311*x4 + x312);
  const double x314 = -x19*(x177 + x239 + x241 + x243 - x244 + x245);
  const double x315 = x178 + x211 - x248 + x251 + x253 + x254 + x255;
  const double x316 = -x258 + x259;
  const double x317 = -x315*x93;
  const double x318 = -x19*(x173 - x176 + x240 + x242 + x244 - x245 - x262);
  const double x319 = x166 + x168 - x206 + x209 + x248 + x250 + x252 - x254 - x255;
  const double x320 = -x319*x93;
  const double x321 = x232 + x266 + x268;
  const double x322 = -x92*(-x311*x8 + x312);
  const double x323 = 8*pow(x30, 2);
  const double x324 = x13 + x323;
  const double x325 = 2*y3;
  const double x326 = x152 + x3*x325;
  const double x327 = x29*x326;
  const double x328 = 210*x183;
  const double x329 = x328*x6;
  const double x330 = x24*x326;
  const double x331 = 3*x330;
  const double x332 = 30*x29;
  const double x333 = x43*x6;
  const double x334 = x324 - x331 + x332*x333;
  const double x335 = x21*x64;
  const double x336 = 70*x29;
  const double x337 = -x10*x171*(x324 - 5*x330 + x333*x336);
  const double x338 = 10*x155;
  const double x339 = -5*x113*x326 - 20*x113*x43 + x267*x336*x43 + x324*x5 + 2*x99;
  const double x340 = x10*(x325 - x338*y3 + x339);
  const double x341 = (3.0/16.0)*x63*x7;
  const double x342 = x10*(-x3*x338 + 2*x3 + x339);
  const double x343 = 12*x113;
  const double x344 = x267*x332;
  const double x345 = 6*x113;
  out[0] = x64*(36*x0*x15*x3*y3*(pow(x0, 3)*x24 - x1 + y1) - x12 + 15*x13*x14*x15 + 30*x15*x3*x36*x4*y3 - x16*x17 + 4*x19*x30*x31*x4*x54*x55 + 8*x24*x30*x31*x4*x46*x54 - x34*x46*x60 - x34*(-x11*x14 + 3*x14*x23*x29 - x14*x28 - x20 + 5*x21*x4 - 5*x23*x25) - x4*x53 - x40 - x44*(-x14*x41 + 5*x24*x4 - 1) + x48 + x55*x59 - x62);
  out[1] = x93*(x65 + x68 + x71 + x91);
  out[2] = x92*(x101 + x121 + x5*x68 - x94*y3 - x96);
  out[3] = x93*(x122*x69 + x123 - x53 + x70 + x91);
  out[4] = -x64*(3*x10*x13*x4 + x124 - x127*(x125 + x126) - x128*x46*x88 - x130 + 12*x15*x3*x4*y3 + 4*x21*x26*x30*x31*x46*x8 + x40 - x48 - x8*x83);
  out[5] = -x138*(-x111 - x112 + x116 + x117 - x120 - x127*x137 + x132 - x134 + x135*x58 + x96 + x98);
  out[6] = -x92*(x100 + x121 + x122*x97 + x123*x5 - x3*x94 - x39);
  out[7] = x64*(-x111*x7 - x112*x7 + x117*x7 - x120*x7 + x127*(-x148*x150 + x148*x98 - x149*x7 + x151*x7) - x134*x7 + x141*x7 - x142*x58*x7 + x147*x25*x7 + x39*x7 + x7*x98);
  out[8] = x64*(-x110*x152 + x12*x13 - x127*x157 + x132*x5 - x133*x6 + x139*x51 + x141*x5 - x154*x46 + x156*x48 + x158*x4 + x159 - x27*x36 + x39*x5 + x40 + x5*x96 - x6*x83);
  out[9] = x172;
  out[10] = x181;
  out[11] = x196;
  out[12] = x181;
  out[13] = x198;
  out[14] = x199;
  out[15] = x204;
  out[16] = x205;
  out[17] = x212;
  out[18] = x92*(x220 + x225);
  out[19] = x238;
  out[20] = x64*(x247 + x257*x4);
  out[21] = x238;
  out[22] = x92*(x237 + x260);
  out[23] = x261;
  out[24] = -x64*(x263 + x264*x4);
  out[25] = x265;
  out[26] = x269*x92;
  out[27] = x172;
  out[28] = x181;
  out[29] = x196;
  out[30] = x181;
  out[31] = x198;
  out[32] = x199;
  out[33] = x204;
  out[34] = x205;
  out[35] = x212;
  out[36] = -x64*(3*x10*x13*x8 + x12 - x130 + 12*x15*x3*x8*y3 + 4*x21*x26*x275*x30*x31*x4 - x25*x275*x88 + x273 - x274*(x125 + x79) - x276 - x277*x4);
  out[37] = x93*(-x279 + x281*x69 + x283 + x289 + x70);
  out[38] = -x92*(x135*x288 - x137*x274 + x290 - x292 - x293 + x294 - x295 + x296 - x297 + x298 + x98);
  out[39] = x93*(x289 + x299 + x300 + x71);
  out[40] = x64*(-x124 + 15*x13*x15*x301 + 30*x15*x271*x3*x8*y3 + 36*x15*x3*x7*y3*(-x2 + x24*pow(x7, 3) + y2) - x17*x302 + x19*x286*x288 + 4*x19*x286*x30*x31*x54*x8 - x197*x275*x34 + 8*x24*x275*x30*x31*x54*x8 - x273 + x276 - x279*x8 - x34*(-x11*x301 - x20 + 5*x21*x8 + 3*x23*x29*x301 - x28*x301 - 5*x285) - x44*(5*x24*x8 - x301*x41 - 1) - x62);
  out[41] = x138*(x101 - x294 + x300*x5 - x303*y3 + x304);
  out[42] = x64*(x0*x128*x147 - x0*x142*x288 + x0*x272 - x0*x292 - x0*x293 - x0*x295 + x0*x296 - x0*x297 + x0*x306 + x0*x98 + x274*(-x0*x149 + x0*x151 - x150*x307 + x307*x98));
  out[43] = -x138*(x100 - x272 + x281*x97 + x283*x5 - x3*x303 + x304);
  out[44] = x64*(x124*x13 - x154*x275 + x156*x276 - x157*x274 + x158*x8 + x159 - x207*x8 - x27*x271 + x272*x5 + x273 - x277*x6 + x290*x5 - x291*x6 + x294*x5 + x305*x51 + x306*x5);
  out[45] = x138*(x225 + x237);
  out[46] = x308;
  out[47] = x261;
  out[48] = x308;
  out[49] = x138*(x220 + x260);
  out[50] = x64*(x247 + x257*x8);
  out[51] = x265;
  out[52] = -x64*(x263 + x264*x8);
  out[53] = x138*x269;
  out[54] = -x92*(x309 + x310);
  out[55] = x313;
  out[56] = -x64*(x314 + x315*x4);
  out[57] = x313;
  out[58] = -x92*(x312 + x316);
  out[59] = x317;
  out[60] = -x64*(x318 + x319*x4);
  out[61] = x320;
  out[62] = -x321*x92;
  out[63] = -x138*(x309 + x312);
  out[64] = x322;
  out[65] = x317;
  out[66] = x322;
  out[67] = -x138*(x310 + x316);
  out[68] = -x64*(x314 + x315*x8);
  out[69] = x320;
  out[70] = -x64*(x318 + x319*x8);
  out[71] = -x138*x321;
  out[72] = x335*(x16*x327 - x324*x35 - x329*x4 + x334);
  out[73] = x337;
  out[74] = -x170*x340;
  out[75] = x337;
  out[76] = x335*(-x270*x324 + x302*x327 - x329*x8 + x334);
  out[77] = -x340*x341;
  out[78] = x170*x342;
  out[79] = x341*x342;
  out[80] = x335*(-12*nu + 3*x155*x324 + 6*x155 + x217*x43 - 150*x29*x333 + x3*x343 - x3*x344 - x323 - 15*x327*x6 + x328*pow(x5, 4) + x331 + x343*y3 - x344*y3 + x345*(x3 + x99) + x345*(x99 + y3) + 7);
}

}  // namespace dislo::gen
