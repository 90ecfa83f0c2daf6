package com.acme.shop.util;

public class Abacus {
    private int beads;
    private final int beadsLimit = 65;

    public void addBeads(int amount) {
        beads = Math.min(beads + amount, beadsLimit);
    }

    public int beadsValue() {
        return beads;
    }

    public boolean isBeadsFull() {
        return beads >= beadsLimit;
    }

    public void clearBeads() {
        // back to the initial state
        beads = 0;
    }
}
