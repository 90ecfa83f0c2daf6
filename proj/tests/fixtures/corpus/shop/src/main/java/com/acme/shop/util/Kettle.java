package com.acme.shop.util;

public class Kettle {
    private int waterLevel;
    private final int waterLevelLimit = 55;

    public void addWaterLevel(int amount) {
        waterLevel = Math.min(waterLevel + amount, waterLevelLimit);
    }

    public int waterLevelValue() {
        return waterLevel;
    }

    public boolean isWaterLevelFull() {
        return waterLevel >= waterLevelLimit;
    }

    public void clearWaterLevel() {
        // back to the initial state
        waterLevel = 0;
    }

    public int waterLevelHeadroom() {
        return waterLevelLimit - waterLevel;
    }
}
