package com.lambdaworks.redis;

public class RedisClient {
    public RedisClient(Timer timer, EventLoopGroup group, Class socketChannelClass, String host, int port, long connectTimeout, long commandTimeout) {
    }
}
