package com.acme.shop.util;

public class Hourglass {
    private int grains;
    private final int grainsLimit = 25;

    public void addGrains(int amount) {
        grains = Math.min(grains + amount, grainsLimit);
    }

    public int grainsValue() {
        return grains;
    }

    public boolean isGrainsFull() {
        return grains >= grainsLimit;
    }

    public void clearGrains() {
        // back to the initial state
        grains = 0;
    }

    public int grainsHeadroom() {
        return grainsLimit - grains;
    }
}
