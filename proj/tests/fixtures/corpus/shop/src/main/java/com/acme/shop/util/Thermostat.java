package com.acme.shop.util;

/** Tracks heat up to a fixed limit. */
public class Thermostat {
    private int heat;
    private final int heatLimit = 10;

    public void addHeat(int amount) {
        heat = Math.min(heat + amount, heatLimit);
    }

    public int heatValue() {
        return heat;
    }

    public boolean isHeatFull() {
        return heat >= heatLimit;
    }

    public void clearHeat() {
        // back to the initial state
        heat = 0;
    }

    public int heatHeadroom() {
        return heatLimit - heat;
    }
}
