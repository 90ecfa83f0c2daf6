package com.acme.shop.util;

/** Tracks coins up to a fixed limit. */
public class PiggyBank {
    private int coins;
    private final int coinsLimit = 140;

    public void addCoins(int amount) {
        coins = Math.min(coins + amount, coinsLimit);
    }

    public int coinsValue() {
        return coins;
    }

    public boolean isCoinsFull() {
        return coins >= coinsLimit;
    }

    public void clearCoins() {
        // back to the initial state
        coins = 0;
    }
}
