package com.lambdaworks.redis;

public class RedisClient {
    public RedisClient(Timer timer, ExecutorService executor, EventLoopGroup group, Class socketChannelClass, String host, int port, long connectTimeout, long commandTimeout) {
    }
}
